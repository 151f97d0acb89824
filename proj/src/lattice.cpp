#include "gaborlat/lattice.hpp"

#include <cmath>

#include "gaborlat/error.hpp"

namespace gaborlat {

ExactMatrix to_exact(const IntMatrix& m) {
  return {FieldScalar(Rational(m.a)), FieldScalar(Rational(m.b)), FieldScalar(Rational(m.c)),
          FieldScalar(Rational(m.d))};
}

FloatMatrix to_float(const ExactMatrix& m) {
  return {m.a.to_double(), m.b.to_double(), m.c.to_double(), m.d.to_double()};
}

Lattice2D Lattice2D::exact(ExactMatrix basis) {
  if (basis.det().is_zero()) throw Error(ErrorCode::SingularBasis, "basis determinant is 0");
  return Lattice2D(std::move(basis), 1e-12);
}

Lattice2D Lattice2D::from_floats(FloatMatrix basis, double tol) {
  if (!(tol >= 0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be non-negative");
  if (std::fabs(basis.det()) <= tol) {
    throw Error(ErrorCode::SingularBasis, "basis determinant is 0 within tolerance");
  }
  return Lattice2D(basis, tol);
}

const ExactMatrix& Lattice2D::exact_basis() const {
  if (const auto* m = std::get_if<ExactMatrix>(&basis_)) return *m;
  throw Error(ErrorCode::ExactBackendRequired, "operation needs an exact lattice basis");
}

FloatMatrix Lattice2D::float_basis() const {
  if (const auto* m = std::get_if<ExactMatrix>(&basis_)) return to_float(*m);
  return std::get<FloatMatrix>(basis_);
}

Density density(const Lattice2D& lattice) {
  Density out;
  if (lattice.backend() == Backend::Float) {
    out.value = 1.0 / std::fabs(lattice.float_basis().det());
    return out;
  }
  const FieldScalar det = abs(lattice.exact_basis().det());
  try {
    out.exact = FieldScalar(1) / det;
    out.value = out.exact->to_double();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotInField) throw;
    out.value = 1.0 / det.to_double();
  }
  return out;
}

ProjectionResult project_first(const Lattice2D& lattice) {
  const ExactMatrix& m = lattice.exact_basis();
  const FieldScalar& a = m.a;
  const FieldScalar& b = m.b;
  ProjectionResult out;
  if (a.is_zero() && b.is_zero()) {
    out.kind = ProjectionResult::Kind::Zero;
    return out;
  }
  if (a.is_zero() || b.is_zero()) {
    out.kind = ProjectionResult::Kind::Discrete;
    out.generator = abs(a.is_zero() ? b : a);
    return out;
  }
  // b/a ∈ ℚ iff the coefficient vectors are proportional: b0·a1 = b1·a0.
  const Rational& a0 = a.rational_part();
  const Rational& a1 = a.symbol_part();
  const Rational& b0 = b.rational_part();
  const Rational& b1 = b.symbol_part();
  if (b0 * a1 != b1 * a0) {
    out.kind = ProjectionResult::Kind::Dense;
    return out;
  }
  Rational ratio = a0 != 0 ? Rational(b0 / a0) : Rational(b1 / a1);
  ratio.canonicalize();
  const Rational q(ratio.get_den());
  out.kind = ProjectionResult::Kind::Discrete;
  out.generator = abs(a) / FieldScalar(q);
  return out;
}

OrientedLattice orient_positive(const Lattice2D& lattice) {
  if (lattice.backend() == Backend::Float) {
    const FloatMatrix m = lattice.float_basis();
    if (m.det() > 0) return {lattice, false};
    return {Lattice2D::from_floats({m.b, m.a, m.d, m.c}, lattice.tolerance()), true};
  }
  const ExactMatrix& m = lattice.exact_basis();
  if (m.det().sign() > 0) return {lattice, false};
  return {Lattice2D::exact({m.b, m.a, m.d, m.c}), true};
}

Bezout canonical_bezout(const Integer& m, const Integer& n) {
  if (n == 0) {
    if (abs(m) != 1) throw Error(ErrorCode::InvalidArgument, "gcd(m, n) != 1");
    return {Integer(sgn(m)), Integer(0)};
  }
  Integer g, r, s;
  mpz_gcdext(g.get_mpz_t(), r.get_mpz_t(), s.get_mpz_t(), m.get_mpz_t(), n.get_mpz_t());
  if (g != 1) throw Error(ErrorCode::InvalidArgument, "gcd(m, n) != 1");
  // All solutions: (r + n·t, s − m·t). Pick t with 0 ≤ r < |n|.
  const Integer abs_n = abs(n);
  Integer r_mod;
  mpz_fdiv_r(r_mod.get_mpz_t(), r.get_mpz_t(), abs_n.get_mpz_t());
  const Integer t = (r_mod - r) / n;
  r = r_mod;
  s = s - m * t;
  return {r, s};
}

Normalization normalize_lower_triangular(const Lattice2D& lattice) {
  const ExactMatrix& basis = lattice.exact_basis();
  if (basis.det() != FieldScalar(1)) {
    throw Error(ErrorCode::NotDensityOne,
                "normalization needs det = 1, got " + basis.det().to_string());
  }
  const ProjectionResult proj = project_first(lattice);
  if (proj.kind != ProjectionResult::Kind::Discrete) {
    throw Error(ErrorCode::NotDiscrete, "first-coordinate projection is not discrete");
  }
  const FieldScalar& tau = *proj.generator;
  const Rational m_q = (basis.a / tau).as_rational();
  const Rational n_q = (basis.b / tau).as_rational();
  if (!is_integer(m_q) || !is_integer(n_q)) {
    throw Error(ErrorCode::NotDiscrete, "projection generator does not divide the first row");
  }
  const Integer m = m_q.get_num();
  const Integer n = n_q.get_num();
  const Bezout bz = canonical_bezout(m, n);

  Normalization out;
  out.unimodular = {bz.r, Integer(-n), bz.s, m};
  out.lower = basis * to_exact(out.unimodular);
  out.tau = tau;

  if (out.unimodular.det() != 1 || !out.lower.b.is_zero() || out.lower.a != tau ||
      out.lower.a * out.lower.d != FieldScalar(1)) {
    throw Error(ErrorCode::InvalidArgument, "internal: normalization postcondition failed");
  }
  return out;
}

std::pair<FieldScalar, FieldScalar> chirp_params(const ExactMatrix& lower) {
  if (!lower.b.is_zero() || lower.a.sign() <= 0 || lower.a * lower.d != FieldScalar(1)) {
    throw Error(ErrorCode::NotLowerTriangular, "expected [[a, 0], [c, 1/a]] with a > 0");
  }
  // L⁻¹ = [[1/a, 0], [−c, a]] since det L = 1.
  return {FieldScalar(1) / lower.a, -lower.c};
}

Lattice2D rotation_lattice(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return Lattice2D::from_floats({c, -s, s, c});
}

}  // namespace gaborlat
