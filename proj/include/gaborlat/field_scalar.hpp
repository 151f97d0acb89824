#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "gaborlat/rational.hpp"

namespace gaborlat {

/// The single adjoined number ξ of a computation. Irrationality is declared,
/// never inferred from the float approximation.
struct Symbol {
  std::string name;
  double approx = 0.0;
  bool irrational = true;
  /// ξ² when it is rational (e.g. 2 for √2). Needed only for products of two
  /// irrational parts and for divisions that leave the rationals.
  std::optional<Rational> square;
};

using SymbolPtr = std::shared_ptr<const Symbol>;

/// Exact number q0 + q1·ξ with rational coefficients.
///
/// q1 == 0 exactly when the value is rational; the symbol pointer of a
/// rational value is irrelevant and ignored in comparisons.
class FieldScalar {
 public:
  FieldScalar() = default;
  FieldScalar(long v) : q0_(v) {}  // NOLINT(google-explicit-constructor)
  FieldScalar(Rational q0) : q0_(std::move(q0)) { q0_.canonicalize(); }  // NOLINT
  FieldScalar(Rational q0, Rational q1, SymbolPtr symbol);

  const Rational& rational_part() const { return q0_; }
  const Rational& symbol_part() const { return q1_; }
  const SymbolPtr& symbol() const { return symbol_; }

  bool is_rational() const { return q1_ == 0; }
  bool is_zero() const { return q0_ == 0 && q1_ == 0; }
  /// Throws NotInField unless the value is rational.
  const Rational& as_rational() const;

  /// Sign of the value. Exact for rational values and for quadratic symbols;
  /// otherwise decided from the declared approximation.
  int sign() const;
  double to_double() const;
  std::string to_string() const;

  FieldScalar operator-() const;
  friend FieldScalar operator+(const FieldScalar& x, const FieldScalar& y);
  friend FieldScalar operator-(const FieldScalar& x, const FieldScalar& y);
  friend FieldScalar operator*(const FieldScalar& x, const FieldScalar& y);
  /// Division is only defined when the quotient stays in ℚ + ℚξ.
  friend FieldScalar operator/(const FieldScalar& x, const FieldScalar& y);
  friend bool operator==(const FieldScalar& x, const FieldScalar& y);
  friend bool operator!=(const FieldScalar& x, const FieldScalar& y) { return !(x == y); }

 private:
  void normalize();

  Rational q0_{0};
  Rational q1_{0};
  SymbolPtr symbol_;
};

FieldScalar abs(const FieldScalar& x);

/// Parses "p/q", "p/q + r/s*name", "name", "-r/s*name" and similar sums. A
/// symbol reference must match `symbol` (which may be null for purely
/// rational input).
FieldScalar parse_field_scalar(std::string_view text, const SymbolPtr& symbol);

}  // namespace gaborlat
