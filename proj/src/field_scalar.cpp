#include "gaborlat/field_scalar.hpp"

#include <cctype>
#include <cmath>

#include "gaborlat/error.hpp"

namespace gaborlat {

namespace {

const SymbolPtr& common_symbol(const FieldScalar& x, const FieldScalar& y) {
  if (x.is_rational()) return y.symbol();
  if (y.is_rational()) return x.symbol();
  if (x.symbol() != y.symbol() && x.symbol()->name != y.symbol()->name) {
    throw Error(ErrorCode::MultipleSymbols,
                "cannot combine '" + x.symbol()->name + "' with '" + y.symbol()->name + "'");
  }
  return x.symbol();
}

const Rational& require_square(const SymbolPtr& s) {
  if (!s || !s->square) {
    throw Error(ErrorCode::NotInField,
                "product needs the square of symbol '" + (s ? s->name : std::string("?")) +
                    "', which was not declared");
  }
  return *s->square;
}

// Sign of x + y·√s with s > 0 and the root taken with sign `root_sign`.
int quadratic_sign(const Rational& x, const Rational& y, const Rational& s, int root_sign) {
  const int sx = sgn(x);
  const int sy = sgn(y) * root_sign;
  if (sx == 0) return sy;
  if (sy == 0 || sx == sy) return sx;
  const Rational lhs = x * x;
  const Rational rhs = y * y * s;
  return lhs > rhs ? sx : sy;
}

}  // namespace

FieldScalar::FieldScalar(Rational q0, Rational q1, SymbolPtr symbol)
    : q0_(std::move(q0)), q1_(std::move(q1)), symbol_(std::move(symbol)) {
  q0_.canonicalize();
  q1_.canonicalize();
  if (q1_ != 0) {
    if (!symbol_) throw Error(ErrorCode::InvalidArgument, "irrational part without a symbol");
    if (!symbol_->irrational) {
      throw Error(ErrorCode::InvalidArgument,
                  "symbol '" + symbol_->name + "' is not declared irrational");
    }
  }
  normalize();
}

void FieldScalar::normalize() {
  if (q1_ == 0) symbol_.reset();
}

const Rational& FieldScalar::as_rational() const {
  if (!is_rational()) throw Error(ErrorCode::NotInField, to_string() + " is not rational");
  return q0_;
}

int FieldScalar::sign() const {
  if (is_rational()) return sgn(q0_);
  if (symbol_->square && *symbol_->square > 0) {
    return quadratic_sign(q0_, q1_, *symbol_->square, symbol_->approx < 0 ? -1 : 1);
  }
  const double v = to_double();
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

double FieldScalar::to_double() const {
  if (is_rational()) return q0_.get_d();
  return q0_.get_d() + q1_.get_d() * symbol_->approx;
}

std::string FieldScalar::to_string() const {
  if (is_rational()) return gaborlat::to_string(q0_);
  std::string out;
  if (q0_ != 0) out = gaborlat::to_string(q0_) + " + ";
  out += gaborlat::to_string(q1_) + "*" + symbol_->name;
  return out;
}

FieldScalar FieldScalar::operator-() const {
  FieldScalar r = *this;
  r.q0_ = -q0_;
  r.q1_ = -q1_;
  return r;
}

FieldScalar operator+(const FieldScalar& x, const FieldScalar& y) {
  const SymbolPtr& s = common_symbol(x, y);
  FieldScalar r;
  r.q0_ = x.q0_ + y.q0_;
  r.q1_ = x.q1_ + y.q1_;
  r.symbol_ = s;
  r.normalize();
  return r;
}

FieldScalar operator-(const FieldScalar& x, const FieldScalar& y) { return x + (-y); }

FieldScalar operator*(const FieldScalar& x, const FieldScalar& y) {
  const SymbolPtr& s = common_symbol(x, y);
  FieldScalar r;
  r.q0_ = x.q0_ * y.q0_;
  r.q1_ = x.q0_ * y.q1_ + x.q1_ * y.q0_;
  if (x.q1_ != 0 && y.q1_ != 0) r.q0_ += x.q1_ * y.q1_ * require_square(s);
  r.symbol_ = s;
  r.normalize();
  return r;
}

FieldScalar operator/(const FieldScalar& x, const FieldScalar& y) {
  if (y.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero");
  if (y.is_rational()) {
    FieldScalar r = x;
    r.q0_ = x.q0_ / y.q0_;
    r.q1_ = x.q1_ / y.q0_;
    r.normalize();
    return r;
  }
  const SymbolPtr& s = common_symbol(x, y);
  // Proportional coefficients: the quotient is rational.
  if (x.q0_ * y.q1_ == x.q1_ * y.q0_) return FieldScalar(Rational(x.q1_ / y.q1_));
  if (s->square) {
    // Multiply through by the conjugate y0 - y1ξ.
    const Rational norm = y.q0_ * y.q0_ - y.q1_ * y.q1_ * *s->square;
    const FieldScalar conj(y.q0_, -y.q1_, s);
    FieldScalar r = x * conj;
    r.q0_ /= norm;
    r.q1_ /= norm;
    r.normalize();
    return r;
  }
  throw Error(ErrorCode::NotInField,
              "quotient " + x.to_string() + " / " + y.to_string() + " leaves the field");
}

bool operator==(const FieldScalar& x, const FieldScalar& y) {
  if (x.q0_ != y.q0_ || x.q1_ != y.q1_) return false;
  if (x.q1_ == 0) return true;
  return x.symbol_ == y.symbol_ || x.symbol_->name == y.symbol_->name;
}

FieldScalar abs(const FieldScalar& x) { return x.sign() < 0 ? -x : x; }

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }

}  // namespace

FieldScalar parse_field_scalar(std::string_view text, const SymbolPtr& symbol) {
  const std::string_view body = trim(text);
  if (body.empty()) throw Error(ErrorCode::ParseError, "empty scalar");

  FieldScalar total;
  std::size_t pos = 0;
  bool first = true;
  while (pos < body.size()) {
    // Split off one signed term; a sign right after '/' or '*' belongs to the term.
    int sign = 1;
    while (pos < body.size() && (body[pos] == '+' || body[pos] == '-' ||
                                 std::isspace(static_cast<unsigned char>(body[pos])))) {
      if (body[pos] == '-') sign = -sign;
      ++pos;
    }
    std::size_t end = pos;
    while (end < body.size() && body[end] != '+' && body[end] != '-') ++end;
    const std::string_view term = trim(body.substr(pos, end - pos));
    if (term.empty()) throw Error(ErrorCode::ParseError, "malformed scalar '" + std::string(text) + "'");

    const auto star = term.find('*');
    std::string_view coeff_text = term;
    std::string_view name;
    if (star != std::string_view::npos) {
      coeff_text = trim(term.substr(0, star));
      name = trim(term.substr(star + 1));
    } else if (is_name_start(term.front())) {
      coeff_text = "1";
      name = term;
    }
    Rational coeff = parse_rational(coeff_text);
    if (sign < 0) coeff = -coeff;

    if (name.empty()) {
      total = total + FieldScalar(coeff);
    } else {
      if (!symbol || symbol->name != name) {
        throw Error(ErrorCode::ParseError, "unknown symbol '" + std::string(name) + "' in '" +
                                               std::string(text) + "'");
      }
      total = total + FieldScalar(Rational(0), coeff, symbol);
    }
    first = false;
    pos = end;
  }
  if (first) throw Error(ErrorCode::ParseError, "malformed scalar '" + std::string(text) + "'");
  return total;
}

}  // namespace gaborlat
