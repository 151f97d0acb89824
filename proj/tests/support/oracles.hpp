#pragma once

// Independent reference computations for the tests. Nothing here calls into
// the library for the quantity being checked.

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <numeric>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "gaborlat/error.hpp"

#define CHECK_THROWS_CODE(expr, expected)                      \
  do {                                                         \
    bool thrown_ = false;                                      \
    try {                                                      \
      (void)(expr);                                            \
    } catch (const gaborlat::Error& e_) {                      \
      thrown_ = true;                                          \
      CHECK_MESSAGE(e_.code() == (expected), e_.what());       \
    }                                                          \
    CHECK_MESSAGE(thrown_, "expected " #expected);             \
  } while (0)

namespace oracle {

using cplx = std::complex<double>;
inline constexpr double pi = std::numbers::pi;

/// Composite Simpson on n (even) panels.
inline cplx simpson(const std::function<cplx(double)>& f, double a, double b, int n) {
  if (n % 2) ++n;
  const double h = (b - a) / n;
  cplx s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return s * h / 3.0;
}

/// Bezout pair by exhaustive search with |r|, |s| ≤ bound.
inline std::optional<std::pair<long, long>> brute_bezout(long m, long n, long bound) {
  for (long r = -bound; r <= bound; ++r) {
    for (long s = -bound; s <= bound; ++s) {
      if (m * r + n * s == 1) return std::make_pair(r, s);
    }
  }
  return std::nullopt;
}

/// gcd of p1/q1 and p2/q2 as gcd(p1·q2, p2·q1)/(q1·q2), returned as (num, den).
inline std::pair<long, long> rational_gcd(long p1, long q1, long p2, long q2) {
  const long num = std::gcd(std::abs(p1 * q2), std::abs(p2 * q1));
  const long den = q1 * q2;
  const long g = std::gcd(num, den);
  return {num / g, den / g};
}

/// Fold multiplicity x ↦ #{k : x + a·k ∈ Ω} on N sample points of [0, a).
/// The sample offset keeps points off rational breakpoints.
inline std::vector<int> grid_fold(const std::vector<std::pair<double, double>>& omega, double a, int N = 10000) {
  std::vector<int> mult(static_cast<std::size_t>(N), 0);
  for (int i = 0; i < N; ++i) {
    const double x = (i + 0.3819660112501051) * a / N;
    for (const auto& [lo, hi] : omega) {
      const long k0 = static_cast<long>(std::ceil((lo - x) / a)) - 1;
      const long k1 = static_cast<long>(std::floor((hi - x) / a)) + 1;
      for (long k = k0; k <= k1; ++k) {
        const double y = x + a * static_cast<double>(k);
        if (y >= lo && y < hi) ++mult[static_cast<std::size_t>(i)];
      }
    }
  }
  return mult;
}

inline bool grid_tiles(const std::vector<std::pair<double, double>>& omega, double a) {
  for (int m : grid_fold(omega, a)) {
    if (m != 1) return false;
  }
  return true;
}

/// #(ℤ² ∩ closed ball(c, r)) by brute force.
inline long lattice_count(double cx, double cy, double r) {
  long count = 0;
  for (long m = static_cast<long>(std::floor(cx - r)) - 1; m <= static_cast<long>(std::ceil(cx + r)) + 1; ++m) {
    for (long n = static_cast<long>(std::floor(cy - r)) - 1; n <= static_cast<long>(std::ceil(cy + r)) + 1; ++n) {
      const double dx = static_cast<double>(m) - cx, dy = static_cast<double>(n) - cy;
      if (dx * dx + dy * dy <= r * r) ++count;
    }
  }
  return count;
}

/// Random integer matrix with det 1 and entries in [−bound, bound]: draw a, b, c
/// uniformly and keep the draw when d = (1 + bc)/a is an admissible integer.
struct IntMat {
  long a, b, c, d;
};

inline IntMat random_unimodular(std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> u(-bound, bound);
  for (;;) {
    const long a = u(rng), b = u(rng), c = u(rng);
    if (a == 0) {
      if (b * c == -1) return {a, b, c, u(rng)};
      continue;
    }
    if ((1 + b * c) % a != 0) continue;
    const long d = (1 + b * c) / a;
    if (std::abs(d) <= bound) return {a, b, c, d};
  }
}

/// Random integer in [lo, hi].
inline long uniform_int(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

}  // namespace oracle
