#include <doctest.h>

#include <cmath>
#include <random>

#include "../support/oracles.hpp"
#include "gaborlat/density.hpp"

using namespace gaborlat;

namespace {

const Rect square20{-20, -20, 20, 20};

PointSet2D rotated_integer_lattice(double theta, Rect window) {
  return PointSet2D::from_lattice(std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta), window);
}

}  // namespace

TEST_SUITE("density") {
  TEST_CASE("point set construction") {
    const PointSet2D s({{0, 0}, {1, 1}, {0, 0}, {-1, 2}}, {-3, -3, 3, 3});
    CHECK(s.points().size() == 3);
    CHECK_THROWS_CODE(PointSet2D({{5, 0}}, {-3, -3, 3, 3}), ErrorCode::InvalidArgument);
    const auto z = PointSet2D::from_lattice(1, 0, 0, 1, {-2.5, -2.5, 2.5, 2.5});
    CHECK(z.points().size() == 25);
    CHECK(z.count_in_ball({0, 0}, 1.0) == 5);  // closed ball
  }

  TEST_CASE("property: ball counts match the lattice oracle") {
    std::mt19937_64 rng(401);
    const auto z = PointSet2D::from_lattice(1, 0, 0, 1, square20);
    for (int i = 0; i < 200; ++i) {
      const double cx = oracle::uniform(rng, -8, 8), cy = oracle::uniform(rng, -8, 8), r = oracle::uniform(rng, 0.5, 10);
      CHECK(z.count_in_ball({cx, cy}, r) == static_cast<std::size_t>(oracle::lattice_count(cx, cy, r)));
    }
  }

  TEST_CASE("upper_beurling_density examples") {
    const auto z = PointSet2D::from_lattice(1, 0, 0, 1, square20);
    const auto e = upper_beurling_density(z, {4, 8});
    REQUIRE(e.per_radius.size() == 2);
    for (const auto& row : e.per_radius) {
      const double want = oracle::lattice_count(row.best_center.x, row.best_center.y, row.radius) /
                          (oracle::pi * row.radius * row.radius);
      CHECK(row.density == doctest::Approx(want).epsilon(1e-14));
      // The sup is at least the count around a lattice point.
      CHECK(row.density >= oracle::lattice_count(0, 0, row.radius) / (oracle::pi * row.radius * row.radius) - 1e-14);
    }
    CHECK(std::abs(e.estimate - 1.0) < 0.15);

    const auto two = PointSet2D::from_lattice(2, 0, 0, 2, square20);
    CHECK(std::abs(upper_beurling_density(two, {4, 8}).estimate - 0.25) < 0.1);

    const auto rot = rotated_integer_lattice(oracle::pi / 4, square20);
    CHECK(std::abs(upper_beurling_density(rot, {4, 8}).estimate - 1.0) < 0.15);
  }

  TEST_CASE("upper_beurling_density errors") {
    const auto z = PointSet2D::from_lattice(1, 0, 0, 1, square20);
    CHECK_THROWS_CODE(upper_beurling_density(z, {4, 11}), ErrorCode::RadiusExceedsWindow);
    CHECK_THROWS_CODE(upper_beurling_density(z, {8, 4}), ErrorCode::InvalidArgument);
    CHECK_THROWS_CODE(upper_beurling_density(z, {}), ErrorCode::EmptyInput);
  }

  TEST_CASE("product_progression_bound examples") {
    CHECK(product_progression_bound(oracle::pi / 4) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(product_progression_bound(oracle::pi / 6) == doctest::Approx(std::sqrt(3.0) / 4).epsilon(1e-15));
    CHECK(product_progression_bound(-3 * oracle::pi / 4) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK_THROWS_CODE(product_progression_bound(oracle::pi / 2), ErrorCode::DegenerateAngle);
    CHECK_THROWS_CODE(product_progression_bound(0.0), ErrorCode::DegenerateAngle);
    CHECK_THROWS_CODE(product_progression_bound(-oracle::pi), ErrorCode::DegenerateAngle);
  }

  TEST_CASE("progression_containment examples") {
    auto f = progression_containment({0, 2, 6}, 2);
    CHECK(f.contained);
    CHECK(std::abs(f.offset) < 1e-12);
    CHECK_FALSE(progression_containment({0, 1, std::sqrt(2.0)}, 1, 1e-6).contained);
    f = progression_containment({0.3, 2.3, 4.3}, 2);
    CHECK(f.contained);
    CHECK(std::abs(f.offset - 0.3) < 1e-12);
    CHECK_THROWS_CODE(progression_containment({}, 1), ErrorCode::EmptyInput);
    CHECK_THROWS_CODE(progression_containment({1}, 0), ErrorCode::InvalidArgument);
  }

  TEST_CASE("property: progression refinement") {
    std::mt19937_64 rng(403);
    for (int i = 0; i < 100; ++i) {
      const double d = oracle::uniform(rng, 0.3, 3), phi = oracle::uniform(rng, -5, 5);
      std::vector<double> A;
      for (int k = 0; k < 8; ++k) A.push_back(phi + d * double(oracle::uniform_int(rng, -20, 20)));
      CHECK(progression_containment(A, d, 1e-9).contained);
      const int k = static_cast<int>(oracle::uniform_int(rng, 2, 5));
      CHECK(progression_containment(A, d / k, 1e-9).contained);
    }
    // Containment at d does not give containment at 2d.
    CHECK(progression_containment({0, 1, 2, 3}, 1).contained);
    CHECK_FALSE(progression_containment({0, 1, 2, 3}, 2).contained);
  }

  TEST_CASE("property: rotation invariance of the estimate") {
    std::mt19937_64 rng(405);
    const double base = upper_beurling_density(PointSet2D::from_lattice(1, 0, 0, 1, square20), {4, 8}).estimate;
    for (int i = 0; i < 8; ++i) {
      const double theta = oracle::uniform(rng, 0, oracle::pi);
      const double est = upper_beurling_density(rotated_integer_lattice(theta, square20), {4, 8}).estimate;
      CHECK(std::abs(est - base) < 0.15);
    }
  }

  TEST_CASE("property: product sets of progressions stay under the bound") {
    std::mt19937_64 rng(407);
    for (int i = 0; i < 10; ++i) {
      const double dA = oracle::uniform(rng, 0.8, 2.5), dB = oracle::uniform(rng, 0.8, 2.5);
      const double pA = oracle::uniform(rng, 0, dA), pB = oracle::uniform(rng, 0, dB);
      std::vector<Point2> pts;
      for (int m = -40; m <= 40; ++m) {
        const double x = pA + dA * m;
        if (x < -20 || x > 20 || oracle::uniform(rng, 0, 1) < 0.2) continue;
        for (int n = -40; n <= 40; ++n) {
          const double y = pB + dB * n;
          if (y >= -20 && y <= 20) pts.push_back({x, y});
        }
      }
      const auto est = upper_beurling_density(PointSet2D(pts, square20), {4, 8});
      for (const auto& row : est.per_radius) CHECK(row.density <= 1.0 / (dA * dB) + 0.1);
    }
  }
}
