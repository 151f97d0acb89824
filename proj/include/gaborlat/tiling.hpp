#pragma once

#include <map>
#include <vector>

#include "gaborlat/rational.hpp"

namespace gaborlat {

/// Half-open interval [lo, hi).
struct Interval {
  Rational lo, hi;
  Rational length() const { return hi - lo; }
  friend bool operator==(const Interval& x, const Interval& y) { return x.lo == y.lo && x.hi == y.hi; }
};

/// Finite union of disjoint half-open intervals, kept sorted with touching
/// neighbours merged.
class IntervalSet {
 public:
  IntervalSet() = default;
  /// Throws InvalidArgument for empty/reversed intervals or overlaps.
  explicit IntervalSet(std::vector<Interval> intervals);

  const std::vector<Interval>& intervals() const { return intervals_; }
  bool empty() const { return intervals_.empty(); }
  Rational measure() const;
  IntervalSet translated(const Rational& t) const;
  /// Image under x ↦ μx; for μ < 0 the half-open orientation is kept as [μ·hi, μ·lo).
  IntervalSet scaled(const Rational& mu) const;
  /// Membership of x in the union.
  bool contains(const Rational& x) const;
  bool contains(double x) const;

  friend bool operator==(const IntervalSet& x, const IntervalSet& y) { return x.intervals_ == y.intervals_; }

 private:
  std::vector<Interval> intervals_;
};

/// x ↦ #{k : x + a·k ∈ Ω} on [0, a) as a step function.
struct FoldProfile {
  struct Piece {
    Rational lo, hi;
    long multiplicity = 0;
  };
  Rational period;
  std::vector<Piece> pieces;  // consecutive, covering [0, period)
};

/// Largest |endpoint| accepted by fold_mod before UnboundedSet is raised.
inline constexpr long kDefaultFoldBound = 1'000'000;

FoldProfile fold_mod(const IntervalSet& omega, const Rational& a, long bound = kDefaultFoldBound);

struct TilingResult {
  bool tiles = false;
  FoldProfile profile;
};

/// Ω tiles ℝ by aℤ-translates iff every fold multiplicity is exactly 1.
TilingResult tiles_by(const IntervalSet& omega, const Rational& a, long bound = kDefaultFoldBound);

// ---------------------------------------------------------------------------
// Unit-square tilings of the plane, checked on a finite window.

struct Point2 {
  double x = 0.0, y = 0.0;
};

struct Rect {
  double x0 = 0.0, y0 = 0.0, x1 = 0.0, y1 = 0.0;
  double area() const { return (x1 - x0) * (y1 - y0); }
};

/// Whether the translates [0,1)² + p cover `region` exactly once, ignoring
/// slivers thinner than `tol` along cube edges. The sample must extend
/// `margin` beyond the region (InsufficientMargin otherwise).
bool is_cube_tiling(const std::vector<Point2>& points, const Rect& region, double tol = 1e-9,
                    double margin = 1.0);

struct CubeTilingClass {
  enum class Kind { Lambda1, Lambda2, Neither };
  Kind kind = Kind::Neither;
  Point2 z;
  /// Row (Lambda1) or column (Lambda2) index k ↦ s_k ∈ [0, 1).
  std::map<long, double> shifts;
};

/// Fits the row-shifted form z + ∪ (ℤ + s_k) × {k}, or its transpose. Ties
/// (both forms fit) are reported as Lambda1.
CubeTilingClass classify_cube_tiling(const std::vector<Point2>& points, double tol = 1e-9);

}  // namespace gaborlat
