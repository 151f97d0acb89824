#include "gaborlat/tiling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "gaborlat/error.hpp"

namespace gaborlat {

IntervalSet::IntervalSet(std::vector<Interval> intervals) {
  for (auto& iv : intervals) {
    iv.lo.canonicalize();
    iv.hi.canonicalize();
    if (!(iv.lo < iv.hi)) {
      throw Error(ErrorCode::InvalidArgument,
                  "interval [" + to_string(iv.lo) + ", " + to_string(iv.hi) + ") is empty");
    }
  }
  std::sort(intervals.begin(), intervals.end(),
            [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
  for (auto& iv : intervals) {
    if (!intervals_.empty()) {
      Interval& last = intervals_.back();
      if (iv.lo < last.hi) {
        throw Error(ErrorCode::InvalidArgument, "intervals overlap at " + to_string(iv.lo));
      }
      if (iv.lo == last.hi) {
        last.hi = iv.hi;
        continue;
      }
    }
    intervals_.push_back(std::move(iv));
  }
}

Rational IntervalSet::measure() const {
  Rational total = 0;
  for (const auto& iv : intervals_) total += iv.length();
  return total;
}

IntervalSet IntervalSet::translated(const Rational& t) const {
  std::vector<Interval> out;
  out.reserve(intervals_.size());
  for (const auto& iv : intervals_) out.push_back({iv.lo + t, iv.hi + t});
  return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::scaled(const Rational& mu) const {
  if (mu == 0) throw Error(ErrorCode::InvalidArgument, "scale factor 0");
  std::vector<Interval> out;
  out.reserve(intervals_.size());
  for (const auto& iv : intervals_) {
    if (mu > 0) {
      out.push_back({iv.lo * mu, iv.hi * mu});
    } else {
      out.push_back({iv.hi * mu, iv.lo * mu});
    }
  }
  return IntervalSet(std::move(out));
}

bool IntervalSet::contains(const Rational& x) const {
  return std::any_of(intervals_.begin(), intervals_.end(),
                     [&](const Interval& iv) { return iv.lo <= x && x < iv.hi; });
}

bool IntervalSet::contains(double x) const {
  return std::any_of(intervals_.begin(), intervals_.end(), [&](const Interval& iv) {
    return iv.lo.get_d() <= x && x < iv.hi.get_d();
  });
}

namespace {

Integer floor_div(const Rational& x, const Rational& a) {
  const Rational q = x / a;
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

}  // namespace

FoldProfile fold_mod(const IntervalSet& omega, const Rational& a, long bound) {
  if (!(a > 0)) throw Error(ErrorCode::InvalidArgument, "period must be positive");
  const Rational limit(bound);
  // Folded pieces contribute +1 on [lo, hi) ⊆ [0, a): accumulate a difference map.
  std::map<Rational, long> delta;
  delta[Rational(0)] += 0;
  delta[a] += 0;
  for (const auto& iv : omega.intervals()) {
    if (abs(iv.lo) > limit || abs(iv.hi) > limit) {
      throw Error(ErrorCode::UnboundedSet, "interval endpoint beyond bound " + std::to_string(bound));
    }
    const Integer k_first = floor_div(iv.lo, a);
    const Integer k_last = floor_div(iv.hi, a);
    if (k_last - k_first > bound) {
      throw Error(ErrorCode::UnboundedSet, "interval spans too many periods");
    }
    for (Integer k = k_first; k <= k_last; ++k) {
      const Rational base = Rational(k) * a;
      const Rational lo = std::max(iv.lo, base) - base;
      const Rational hi = std::min(iv.hi, Rational(base + a)) - base;
      if (lo < hi) {
        delta[lo] += 1;
        delta[hi] -= 1;
      }
    }
  }
  FoldProfile profile;
  profile.period = a;
  long level = 0;
  std::optional<Rational> prev;
  for (const auto& [x, d] : delta) {
    if (prev && *prev < x) profile.pieces.push_back({*prev, x, level});
    level += d;
    prev = x;
  }
  // Merge neighbours with equal multiplicity.
  std::vector<FoldProfile::Piece> merged;
  for (auto& p : profile.pieces) {
    if (!merged.empty() && merged.back().multiplicity == p.multiplicity) {
      merged.back().hi = p.hi;
    } else {
      merged.push_back(std::move(p));
    }
  }
  profile.pieces = std::move(merged);
  return profile;
}

TilingResult tiles_by(const IntervalSet& omega, const Rational& a, long bound) {
  TilingResult out;
  out.profile = fold_mod(omega, a, bound);
  out.tiles = std::all_of(out.profile.pieces.begin(), out.profile.pieces.end(),
                          [](const FoldProfile::Piece& p) { return p.multiplicity == 1; });
  return out;
}

// ---------------------------------------------------------------------------

bool is_cube_tiling(const std::vector<Point2>& points, const Rect& region, double tol,
                    double margin) {
  if (!(region.x1 > region.x0 && region.y1 > region.y0) || region.area() < 4.0) {
    throw Error(ErrorCode::InvalidArgument, "region must be a rectangle of area >= 4");
  }
  if (points.empty()) throw Error(ErrorCode::InsufficientMargin, "no points");
  double min_x = std::numeric_limits<double>::infinity(), min_y = min_x;
  double max_x = -min_x, max_y = -min_x;
  for (const auto& p : points) {
    min_x = std::min(min_x, p.x);
    min_y = std::min(min_y, p.y);
    max_x = std::max(max_x, p.x);
    max_y = std::max(max_y, p.y);
  }
  // Cubes extend up and to the right of their anchor point.
  if (min_x > region.x0 - margin + tol || min_y > region.y0 - margin + tol ||
      max_x < region.x1 - 1.0 + margin - tol || max_y < region.y1 - 1.0 + margin - tol) {
    throw Error(ErrorCode::InsufficientMargin, "point sample does not cover the dilated region");
  }

  std::vector<Point2> relevant;
  std::vector<double> xs{region.x0, region.x1};
  std::vector<double> ys{region.y0, region.y1};
  for (const auto& p : points) {
    if (p.x + 1.0 <= region.x0 || p.x >= region.x1 || p.y + 1.0 <= region.y0 || p.y >= region.y1) {
      continue;
    }
    relevant.push_back(p);
    for (double x : {p.x, p.x + 1.0}) {
      if (x > region.x0 && x < region.x1) xs.push_back(x);
    }
    for (double y : {p.y, p.y + 1.0}) {
      if (y > region.y0 && y < region.y1) ys.push_back(y);
    }
  }
  auto dedup = [tol](std::vector<double>& v) {
    std::sort(v.begin(), v.end());
    std::vector<double> out;
    for (double x : v) {
      if (out.empty() || x - out.back() > tol) out.push_back(x);
    }
    v = std::move(out);
  };
  dedup(xs);
  dedup(ys);

  // One probe per cell of the edge arrangement; cells are never thinner than tol.
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    const double cx = 0.5 * (xs[i] + xs[i + 1]);
    for (std::size_t j = 0; j + 1 < ys.size(); ++j) {
      const double cy = 0.5 * (ys[j] + ys[j + 1]);
      int cover = 0;
      for (const auto& p : relevant) {
        if (p.x <= cx && cx < p.x + 1.0 && p.y <= cy && cy < p.y + 1.0) ++cover;
      }
      if (cover != 1) return false;
    }
  }
  return true;
}

namespace {

double frac(double x) { return x - std::floor(x); }

// Signed distance to the nearest integer, in [−1/2, 1/2).
double wrap(double x) { return x - std::floor(x + 0.5); }

// Row-shifted fit: every y in z2 + ℤ and, per row, every x in one coset of ℤ.
std::optional<CubeTilingClass> fit_rows(const std::vector<Point2>& points, double tol) {
  const Point2* nearest = &points.front();
  for (const auto& p : points) {
    if (p.x * p.x + p.y * p.y < nearest->x * nearest->x + nearest->y * nearest->y) nearest = &p;
  }
  const double z2 = frac(nearest->y);
  std::map<long, double> offsets;  // row ↦ frac(x) of its first point
  for (const auto& p : points) {
    const double dy = p.y - z2;
    if (std::fabs(wrap(dy)) > tol) return std::nullopt;
    const long k = std::lround(dy);
    const auto [it, inserted] = offsets.emplace(k, frac(p.x));
    if (!inserted && std::fabs(wrap(p.x - it->second)) > tol) return std::nullopt;
  }
  const long nearest_row = std::lround(nearest->y - z2);
  const long anchor = offsets.count(0) ? 0 : nearest_row;
  const double z1 = offsets.at(anchor);

  CubeTilingClass out;
  out.kind = CubeTilingClass::Kind::Lambda1;
  out.z = {z1, z2};
  for (const auto& [k, o] : offsets) {
    double s = frac(o - z1);
    if (s > 1.0 - tol) s = 0.0;
    out.shifts[k] = s;
  }
  return out;
}

}  // namespace

CubeTilingClass classify_cube_tiling(const std::vector<Point2>& points, double tol) {
  if (points.empty()) throw Error(ErrorCode::EmptyInput, "no points to classify");
  if (auto rows = fit_rows(points, tol)) return *rows;
  std::vector<Point2> swapped;
  swapped.reserve(points.size());
  for (const auto& p : points) swapped.push_back({p.y, p.x});
  if (auto cols = fit_rows(swapped, tol)) {
    cols->kind = CubeTilingClass::Kind::Lambda2;
    cols->z = {cols->z.y, cols->z.x};
    return *cols;
  }
  return {};
}

}  // namespace gaborlat
