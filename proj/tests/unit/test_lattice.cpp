#include <doctest.h>

#include <cmath>
#include <random>

#include "../support/oracles.hpp"
#include "gaborlat/lattice.hpp"

using namespace gaborlat;

namespace {

SymbolPtr sqrt2() {
  return std::make_shared<Symbol>(Symbol{"sqrt2", std::sqrt(2.0), true, Rational(2)});
}

SymbolPtr xi_without_square() { return std::make_shared<Symbol>(Symbol{"xi", 0.5772156649, true, std::nullopt}); }

Lattice2D int_lattice(long a, long b, long c, long d) {
  return Lattice2D::exact(to_exact(IntMatrix{Integer(a), Integer(b), Integer(c), Integer(d)}));
}

FieldScalar q(long p, long r = 1) { return FieldScalar(Rational(p, r)); }

}  // namespace

TEST_SUITE("rational") {
  TEST_CASE("parse and print") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-6/8") == Rational(-3, 4));
    CHECK(parse_rational(" 5 ") == Rational(5));
    CHECK(to_string(Rational(-3, 4)) == "-3/4");
    CHECK_THROWS_CODE(parse_rational("0.5"), ErrorCode::ParseError);
    CHECK_THROWS_CODE(parse_rational("1/0"), ErrorCode::ParseError);
    CHECK_THROWS_CODE(parse_rational(""), ErrorCode::ParseError);
  }

  TEST_CASE("double conversions") {
    CHECK(rational_from_double(0.375) == Rational(3, 8));
    CHECK(best_rational_approximation(0.333333333333, 100) == Rational(1, 3));
    CHECK(best_rational_approximation(std::numbers::pi, 1000) == Rational(355, 113));
  }
}

TEST_SUITE("field_scalar") {
  TEST_CASE("arithmetic stays in the field") {
    auto s = sqrt2();
    const FieldScalar x(Rational(1, 2), Rational(3, 4), s);
    const FieldScalar y(Rational(1), Rational(-1), s);
    CHECK((x + y) == FieldScalar(Rational(3, 2), Rational(-1, 4), s));
    CHECK((x - x).is_zero());
    CHECK((x - x).is_rational());
    // (1/2 + 3/4 ξ)(1 − ξ) = 1/2 − 3/2 + (3/4 − 1/2) ξ with ξ² = 2.
    CHECK((x * y) == FieldScalar(Rational(-1), Rational(1, 4), s));
    CHECK((x * y) / y == x);
    CHECK((x / q(2)) == FieldScalar(Rational(1, 4), Rational(3, 8), s));
  }

  TEST_CASE("division without a known square") {
    auto s = xi_without_square();
    const FieldScalar x(Rational(2), Rational(4), s);
    const FieldScalar y(Rational(1), Rational(2), s);
    CHECK(x / y == q(2));
    CHECK_THROWS_CODE(q(1) / y, ErrorCode::NotInField);
    CHECK_THROWS_CODE(y * y, ErrorCode::NotInField);
  }

  TEST_CASE("symbols and errors") {
    auto s = sqrt2();
    auto t = std::make_shared<Symbol>(Symbol{"pi", std::numbers::pi, true, std::nullopt});
    CHECK_THROWS_CODE(FieldScalar(Rational(0), Rational(1), s) + FieldScalar(Rational(0), Rational(1), t),
                      ErrorCode::MultipleSymbols);
    auto rational_sym = std::make_shared<Symbol>(Symbol{"half", 0.5, false, std::nullopt});
    CHECK_THROWS_CODE(FieldScalar(Rational(0), Rational(1), rational_sym), ErrorCode::InvalidArgument);
    CHECK_THROWS_CODE(q(1) / q(0), ErrorCode::InvalidArgument);
    CHECK_THROWS_CODE(FieldScalar(Rational(0), Rational(1), s).as_rational(), ErrorCode::NotInField);
  }

  TEST_CASE("sign is exact for quadratic symbols") {
    auto s = sqrt2();
    // 99/70 − ξ is just above zero (99/70 > √2); 140/99 − ξ is just below.
    CHECK(FieldScalar(Rational(99, 70), Rational(-1), s).sign() == 1);
    CHECK(FieldScalar(Rational(140, 99), Rational(-1), s).sign() == -1);
    CHECK(q(0).sign() == 0);
  }

  TEST_CASE("parsing") {
    auto s = sqrt2();
    CHECK(parse_field_scalar("1/2 + 3/4*sqrt2", s) == FieldScalar(Rational(1, 2), Rational(3, 4), s));
    CHECK(parse_field_scalar("sqrt2", s) == FieldScalar(Rational(0), Rational(1), s));
    CHECK(parse_field_scalar("-2*sqrt2", s) == FieldScalar(Rational(0), Rational(-2), s));
    CHECK(parse_field_scalar("7/3", nullptr) == q(7, 3));
    CHECK_THROWS_CODE(parse_field_scalar("sqrt3", s), ErrorCode::ParseError);
    CHECK_THROWS_CODE(parse_field_scalar("sqrt2", nullptr), ErrorCode::ParseError);
    CHECK(FieldScalar(Rational(1, 2), Rational(3, 4), s).to_string() == "1/2 + 3/4*sqrt2");
  }
}

TEST_SUITE("lattice_core") {
  TEST_CASE("density examples") {
    CHECK(*density(int_lattice(1, 0, 0, 1)).exact == q(1));
    CHECK(*density(Lattice2D::exact({q(2), q(0), q(0), q(1, 2)})).exact == q(1));
    const FieldScalar xi(Rational(0), Rational(1), sqrt2());
    CHECK(*density(Lattice2D::exact({q(1), xi, q(0), q(1)})).exact == q(1));
    CHECK(density(int_lattice(2, 0, 0, 1)).value == doctest::Approx(0.5));
    CHECK(density(Lattice2D::from_floats({2.0, 0.0, 0.0, 4.0})).value == doctest::Approx(0.125));
    CHECK_THROWS_CODE(int_lattice(1, 2, 2, 4), ErrorCode::SingularBasis);
    CHECK_THROWS_CODE(Lattice2D::from_floats({1.0, 2.0, 0.5, 1.0}), ErrorCode::SingularBasis);
  }

  TEST_CASE("project_first examples") {
    const FieldScalar xi(Rational(0), Rational(1), sqrt2());
    CHECK(project_first(Lattice2D::exact({q(1), xi, q(0), q(1)})).kind == ProjectionResult::Kind::Dense);
    auto p = project_first(int_lattice(2, 1, 1, 1));
    REQUIRE(p.kind == ProjectionResult::Kind::Discrete);
    CHECK(*p.generator == q(1));
    p = project_first(int_lattice(0, 1, -1, 0));
    CHECK(*p.generator == q(1));
    // First row (ξ, 2ξ): ℤξ + 2ℤξ = ξℤ.
    p = project_first(Lattice2D::exact({xi, xi * q(2), q(1), q(3)}));
    REQUIRE(p.kind == ProjectionResult::Kind::Discrete);
    CHECK(*p.generator == xi);
    // (1 + ξ, 2 + ξ) are not proportional.
    CHECK(project_first(Lattice2D::exact({xi + q(1), xi + q(2), q(1), q(3)})).kind ==
          ProjectionResult::Kind::Dense);
    CHECK_THROWS_CODE(project_first(rotation_lattice(0.3)), ErrorCode::ExactBackendRequired);
  }

  TEST_CASE("cross test matches the rational gcd oracle") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
      const long p1 = oracle::uniform_int(rng, -40, 40), q1 = oracle::uniform_int(rng, 1, 30);
      const long p2 = oracle::uniform_int(rng, -40, 40), q2 = oracle::uniform_int(rng, 1, 30);
      if (p1 == 0 && p2 == 0) continue;
      // Second row chosen to keep the basis invertible.
      const FieldScalar a = q(p1, q1), b = q(p2, q2);
      const FieldScalar c = p1 == 0 ? q(1) : q(0), d = p1 == 0 ? q(0) : q(1);
      const auto res = project_first(Lattice2D::exact({a, b, c, d}));
      REQUIRE(res.kind == ProjectionResult::Kind::Discrete);
      const auto [gn, gd] = oracle::rational_gcd(p1, q1, p2, q2);
      CHECK(*res.generator == q(gn, gd));
    }
  }

  TEST_CASE("canonical Bezout against exhaustive search") {
    for (long m = -12; m <= 12; ++m) {
      for (long n = -12; n <= 12; ++n) {
        if (std::gcd(m, n) != 1) continue;
        const Bezout bz = canonical_bezout(Integer(m), Integer(n));
        CHECK(Integer(m) * bz.r + Integer(n) * bz.s == 1);
        if (n != 0) {
          CHECK(bz.r >= 0);
          CHECK(bz.r < std::abs(n));
          // The canonical pair is the unique one with r in [0, |n|).
          bool found = false;
          for (long r = 0; r < std::abs(n); ++r) {
            if ((1 - m * r) % n == 0) {
              CHECK(bz.r == r);
              found = true;
            }
          }
          CHECK(found);
        } else {
          CHECK(bz.r == (m > 0 ? 1 : -1));
          CHECK(bz.s == 0);
        }
        CHECK(oracle::brute_bezout(m, n, 13).has_value());
      }
    }
    CHECK_THROWS_CODE(canonical_bezout(Integer(2), Integer(4)), ErrorCode::InvalidArgument);
  }

  TEST_CASE("normalize examples") {
    auto n = normalize_lower_triangular(int_lattice(1, 0, 0, 1));
    CHECK(n.lower == to_exact(IntMatrix{Integer(1), Integer(0), Integer(0), Integer(1)}));
    CHECK(n.unimodular == IntMatrix{Integer(1), Integer(0), Integer(0), Integer(1)});

    n = normalize_lower_triangular(int_lattice(2, 1, 1, 1));
    CHECK(n.lower == to_exact(IntMatrix{Integer(1), Integer(0), Integer(1), Integer(1)}));
    CHECK(n.unimodular == IntMatrix{Integer(0), Integer(-1), Integer(1), Integer(2)});
    // Oracle: the search finds some Bezout pair for (m, n) = (2, 1) and the product
    // A·U with that pair's canonical shift is the same L.
    const auto bz = oracle::brute_bezout(2, 1, 3);
    REQUIRE(bz);
    CHECK(2 * bz->first + bz->second == 1);

    n = normalize_lower_triangular(int_lattice(1, 0, 5, 1));
    CHECK(n.lower == to_exact(IntMatrix{Integer(1), Integer(0), Integer(5), Integer(1)}));
    CHECK(n.unimodular == IntMatrix{Integer(1), Integer(0), Integer(0), Integer(1)});

    n = normalize_lower_triangular(Lattice2D::exact({q(1, 2), q(3, 2), q(-1), q(-1)}));
    CHECK(n.tau == q(1, 2));
    CHECK(n.lower.b.is_zero());
    CHECK(n.lower.a * n.lower.d == q(1));
  }

  TEST_CASE("normalize errors") {
    CHECK_THROWS_CODE(normalize_lower_triangular(int_lattice(2, 0, 0, 1)), ErrorCode::NotDensityOne);
    CHECK_THROWS_CODE(normalize_lower_triangular(int_lattice(0, 1, 1, 0)), ErrorCode::NotDensityOne);
    const FieldScalar xi(Rational(0), Rational(1), sqrt2());
    CHECK_THROWS_CODE(normalize_lower_triangular(Lattice2D::exact({q(1), xi, q(0), q(1)})), ErrorCode::NotDiscrete);
    CHECK_THROWS_CODE(normalize_lower_triangular(rotation_lattice(0.0)), ErrorCode::ExactBackendRequired);
  }

  TEST_CASE("orientation swaps columns for det -1") {
    const auto o = orient_positive(int_lattice(0, 1, 1, 0));
    CHECK(o.columns_swapped);
    CHECK(o.lattice.exact_basis().det() == q(1));
    CHECK_FALSE(orient_positive(int_lattice(1, 0, 0, 1)).columns_swapped);
  }

  TEST_CASE("chirp_params examples") {
    auto [mu, nu] = chirp_params(to_exact(IntMatrix{Integer(1), Integer(0), Integer(0), Integer(1)}));
    CHECK(mu == q(1));
    CHECK(nu == q(0));
    std::tie(mu, nu) = chirp_params(to_exact(IntMatrix{Integer(1), Integer(0), Integer(1), Integer(1)}));
    CHECK(mu == q(1));
    CHECK(nu == q(-1));
    std::tie(mu, nu) = chirp_params({q(2), q(0), q(0), q(1, 2)});
    CHECK(mu == q(1, 2));
    CHECK(nu == q(0));
    CHECK_THROWS_CODE(chirp_params({q(1), q(1), q(0), q(1)}), ErrorCode::NotLowerTriangular);
    CHECK_THROWS_CODE(chirp_params({q(-1), q(0), q(0), q(-1)}), ErrorCode::NotLowerTriangular);
  }

  TEST_CASE("rotation_lattice") {
    auto m = rotation_lattice(0.0).float_basis();
    CHECK(m.a == 1.0);
    CHECK(m.d == 1.0);
    m = rotation_lattice(std::numbers::pi / 2).float_basis();
    CHECK(std::abs(m.a) < 1e-15);
    CHECK(m.b == doctest::Approx(-1.0));
    CHECK(m.c == doctest::Approx(1.0));
    m = rotation_lattice(std::numbers::pi / 4).float_basis();
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(m.a - r) < 1e-15);
    CHECK(std::abs(m.b + r) < 1e-15);
    CHECK(std::abs(m.c - r) < 1e-15);
    CHECK(std::abs(m.d - r) < 1e-15);
  }

  TEST_CASE("property: unimodular invariance and normalization postconditions") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 150; ++i) {
      const auto A = oracle::random_unimodular(rng, 20);
      const auto V = oracle::random_unimodular(rng, 5);
      const Lattice2D base = int_lattice(A.a, A.b, A.c, A.d);
      const IntMatrix Vm{Integer(V.a), Integer(V.b), Integer(V.c), Integer(V.d)};
      const Lattice2D moved = Lattice2D::exact(base.exact_basis() * to_exact(Vm));

      CHECK(*density(base).exact == *density(moved).exact);
      const auto p0 = project_first(base), p1 = project_first(moved);
      REQUIRE(p0.kind == ProjectionResult::Kind::Discrete);
      REQUIRE(p1.kind == ProjectionResult::Kind::Discrete);
      CHECK(*p0.generator == *p1.generator);

      const auto n = normalize_lower_triangular(base);
      CHECK(n.unimodular.det() == 1);
      CHECK(base.exact_basis() * to_exact(n.unimodular) == n.lower);
      CHECK(n.lower.b.is_zero());
      CHECK(n.lower.a == *p0.generator);
      CHECK(n.lower.a * n.lower.d == q(1));
    }
  }

  TEST_CASE("property: irrational shear stays dense under basis change") {
    std::mt19937_64 rng(7);
    const FieldScalar xi(Rational(0), Rational(1), sqrt2());
    for (int i = 0; i < 50; ++i) {
      const auto V = oracle::random_unimodular(rng, 6);
      const IntMatrix Vm{Integer(V.a), Integer(V.b), Integer(V.c), Integer(V.d)};
      const Lattice2D moved = Lattice2D::exact(ExactMatrix{q(1), xi, q(0), q(1)} * to_exact(Vm));
      CHECK(project_first(moved).kind == ProjectionResult::Kind::Dense);
      CHECK(*density(moved).exact == q(1));
    }
  }
}
