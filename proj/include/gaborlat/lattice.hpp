#pragma once

#include <array>
#include <optional>
#include <utility>
#include <variant>

#include "gaborlat/field_scalar.hpp"

namespace gaborlat {

/// Row-major 2×2 matrix; the first row is (a, b).
template <typename T>
struct Matrix2 {
  T a{}, b{}, c{}, d{};

  T det() const { return a * d - b * c; }

  friend Matrix2 operator*(const Matrix2& x, const Matrix2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend bool operator==(const Matrix2& x, const Matrix2& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
};

using ExactMatrix = Matrix2<FieldScalar>;
using FloatMatrix = Matrix2<double>;
using IntMatrix = Matrix2<Integer>;

ExactMatrix to_exact(const IntMatrix& m);
FloatMatrix to_float(const ExactMatrix& m);

enum class Backend { Exact, Float };

/// Full-rank lattice Λ = Aℤ² with its basis held exactly or in floating point.
class Lattice2D {
 public:
  static Lattice2D exact(ExactMatrix basis);
  /// `tol` is the absolute tolerance for float comparisons (singularity).
  static Lattice2D from_floats(FloatMatrix basis, double tol = 1e-12);

  Backend backend() const { return std::holds_alternative<ExactMatrix>(basis_) ? Backend::Exact : Backend::Float; }
  /// Throws ExactBackendRequired for float lattices.
  const ExactMatrix& exact_basis() const;
  FloatMatrix float_basis() const;
  double tolerance() const { return tol_; }

 private:
  explicit Lattice2D(std::variant<ExactMatrix, FloatMatrix> basis, double tol)
      : basis_(std::move(basis)), tol_(tol) {}

  std::variant<ExactMatrix, FloatMatrix> basis_;
  double tol_ = 1e-12;
};

/// 1/|det A|. `exact` is present when the reciprocal stays in the field.
struct Density {
  std::optional<FieldScalar> exact;
  double value = 0.0;
};

Density density(const Lattice2D& lattice);

struct ProjectionResult {
  enum class Kind { Discrete, Dense, Zero };
  Kind kind = Kind::Zero;
  /// Positive generator τ of π₁(Λ) = τℤ when Discrete.
  std::optional<FieldScalar> generator;
};

/// Decides whether aℤ + bℤ (first row of the basis) is discrete.
ProjectionResult project_first(const Lattice2D& lattice);

/// Swaps the basis columns when det < 0; the lattice itself is unchanged.
struct OrientedLattice {
  Lattice2D lattice;
  bool columns_swapped = false;
};
OrientedLattice orient_positive(const Lattice2D& lattice);

struct Bezout {
  Integer r, s;
};

/// Canonical r, s with m·r + n·s = 1: 0 ≤ r < |n| when n ≠ 0, and
/// (sign(m), 0) when n = 0. Requires gcd(m, n) = 1.
Bezout canonical_bezout(const Integer& m, const Integer& n);

struct Normalization {
  ExactMatrix lower;  // L = A·U = [[τ, 0], [c, 1/τ]]
  IntMatrix unimodular;  // U, det U = 1
  FieldScalar tau;
};

/// Lower-triangular representative of a density-one lattice with discrete
/// first projection. The result is verified before it is returned.
Normalization normalize_lower_triangular(const Lattice2D& lattice);

/// Parameters (μ, ν) of S = L⁻¹ = [[μ, 0], [ν, 1/μ]] for L = [[a, 0], [c, 1/a]].
std::pair<FieldScalar, FieldScalar> chirp_params(const ExactMatrix& lower);

/// Float lattice with basis R_θ = [[cos θ, −sin θ], [sin θ, cos θ]].
Lattice2D rotation_lattice(double theta);

}  // namespace gaborlat
