#pragma once

#include <vector>

#include "gaborlat/tiling.hpp"

namespace gaborlat {

/// Finite truncation of a planar set; faithful inside `window`.
class PointSet2D {
 public:
  /// Drops exact duplicates; throws InvalidArgument for points outside the window.
  PointSet2D(std::vector<Point2> points, Rect window);

  /// Points of M·ℤ² (columns of M) falling inside `window`.
  static PointSet2D from_lattice(double a, double b, double c, double d, Rect window);

  const std::vector<Point2>& points() const { return points_; }
  const Rect& window() const { return window_; }

  /// Points in the closed ball B(center, r).
  std::size_t count_in_ball(Point2 center, double r) const;

 private:
  std::vector<Point2> points_;  // sorted by x
  Rect window_;
};

struct DensityEstimate {
  struct PerRadius {
    double radius = 0.0;
    double density = 0.0;
    Point2 best_center;
    std::size_t centers = 0;
  };
  std::vector<PerRadius> per_radius;
  double estimate = 0.0;  // max over the two largest radii
  double center_spacing_ratio = 0.125;
};

/// sup over a centre grid (spacing r/8) of #(S ∩ B(x, r)) / πr², for each r.
/// Throws RadiusExceedsWindow if max r exceeds half the window inradius.
DensityEstimate upper_beurling_density(const PointSet2D& s, const std::vector<double>& radii);

/// |sinθ cosθ|; DegenerateAngle on (π/2)ℤ.
double product_progression_bound(double theta);

struct ProgressionFit {
  bool contained = false;
  double offset = 0.0;        // in [0, spacing)
  double max_deviation = 0.0;
};

/// Whether every a lies within tol of offset + spacing·ℤ, the offset being the
/// circular mean of A mod spacing.
ProgressionFit progression_containment(const std::vector<double>& A, double spacing, double offset_tol = 1e-9);

}  // namespace gaborlat
