#include "gaborlat/rational.hpp"

#include <cctype>
#include <cmath>

#include "gaborlat/error.hpp"

namespace gaborlat {

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) {
    throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(whole) + "'");
  }
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(whole) + "'");
    }
  }
  Integer value(std::string(text.substr(i)), 10);
  return negative ? Integer(-value) : value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view t = trim(text);
  const auto slash = t.find('/');
  Rational q;
  if (slash == std::string_view::npos) {
    q = Rational(parse_integer(t, text));
  } else {
    const Integer num = parse_integer(trim(t.substr(0, slash)), text);
    const Integer den = parse_integer(trim(t.substr(slash + 1)), text);
    if (den == 0) {
      throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
    }
    q = Rational(num, den);
  }
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) {
    throw Error(ErrorCode::InvalidArgument, "non-finite value has no rational form");
  }
  Rational q(x);
  q.canonicalize();
  return q;
}

Rational best_rational_approximation(double x, long max_den) {
  if (!std::isfinite(x)) {
    throw Error(ErrorCode::InvalidArgument, "non-finite value has no rational form");
  }
  // Convergents p/q of the continued fraction, plus the best semiconvergent
  // at the denominator cap.
  const double sign = x < 0 ? -1.0 : 1.0;
  double r = std::fabs(x);
  long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int iter = 0; iter < 64; ++iter) {
    const double a_d = std::floor(r);
    if (a_d > 4e18) break;
    const long a = static_cast<long>(a_d);
    const long q2 = a * q1 + q0;
    if (q2 > max_den) {
      const long k = q1 == 0 ? 0 : (max_den - q0) / q1;
      const long ps = k * p1 + p0, qs = k * q1 + q0;
      if (qs > 0 && std::fabs(std::fabs(x) - double(ps) / double(qs)) <
                        std::fabs(std::fabs(x) - double(p1) / double(q1))) {
        p1 = ps;
        q1 = qs;
      }
      break;
    }
    const long p2 = a * p1 + p0;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    const double frac = r - a_d;
    if (frac < 1e-15) break;
    r = 1.0 / frac;
  }
  Rational q(Integer(p1) * (sign < 0 ? -1 : 1), Integer(q1));
  q.canonicalize();
  return q;
}

Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

}  // namespace gaborlat
