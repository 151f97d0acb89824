#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gaborlat {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p" or "p/q" with decimal-free integers; the result is canonical.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

/// Every finite double is a dyadic rational; this conversion is exact.
Rational rational_from_double(double x);

/// Closest rational with denominator at most max_den (continued fractions).
Rational best_rational_approximation(double x, long max_den);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline double to_double(const Rational& q) { return q.get_d(); }

Rational abs(const Rational& q);

}  // namespace gaborlat
