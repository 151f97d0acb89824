#include "gaborlat/density.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "gaborlat/error.hpp"

namespace gaborlat {

namespace {
constexpr double kPi = std::numbers::pi;
}

PointSet2D::PointSet2D(std::vector<Point2> points, Rect window) : window_(window) {
  if (!(window.x1 > window.x0 && window.y1 > window.y0)) {
    throw Error(ErrorCode::InvalidArgument, "declared window is empty");
  }
  for (const auto& p : points) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw Error(ErrorCode::InvalidArgument, "non-finite point");
    if (p.x < window.x0 || p.x > window.x1 || p.y < window.y0 || p.y > window.y1) {
      throw Error(ErrorCode::InvalidArgument, "point outside the declared window");
    }
  }
  std::sort(points.begin(), points.end(), [](const Point2& a, const Point2& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  points.erase(std::unique(points.begin(), points.end(),
                           [](const Point2& a, const Point2& b) { return a.x == b.x && a.y == b.y; }),
               points.end());
  points_ = std::move(points);
}

PointSet2D PointSet2D::from_lattice(double a, double b, double c, double d, Rect window) {
  const double det = a * d - b * c;
  if (std::abs(det) < 1e-14) throw Error(ErrorCode::SingularBasis, "lattice basis is singular");
  // Index bounds from the preimages of the window corners.
  double mlo = INFINITY, mhi = -INFINITY, nlo = INFINITY, nhi = -INFINITY;
  for (double x : {window.x0, window.x1}) {
    for (double y : {window.y0, window.y1}) {
      const double m = (d * x - b * y) / det;
      const double n = (-c * x + a * y) / det;
      mlo = std::min(mlo, m);
      mhi = std::max(mhi, m);
      nlo = std::min(nlo, n);
      nhi = std::max(nhi, n);
    }
  }
  std::vector<Point2> pts;
  for (long m = static_cast<long>(std::floor(mlo)) - 1; m <= static_cast<long>(std::ceil(mhi)) + 1; ++m) {
    for (long n = static_cast<long>(std::floor(nlo)) - 1; n <= static_cast<long>(std::ceil(nhi)) + 1; ++n) {
      const Point2 p{a * static_cast<double>(m) + b * static_cast<double>(n),
                     c * static_cast<double>(m) + d * static_cast<double>(n)};
      if (p.x >= window.x0 && p.x <= window.x1 && p.y >= window.y0 && p.y <= window.y1) pts.push_back(p);
    }
  }
  return PointSet2D(std::move(pts), window);
}

std::size_t PointSet2D::count_in_ball(Point2 center, double r) const {
  const auto first = std::lower_bound(points_.begin(), points_.end(), center.x - r,
                                      [](const Point2& p, double x) { return p.x < x; });
  const double r2 = r * r;
  std::size_t count = 0;
  for (auto it = first; it != points_.end() && it->x <= center.x + r; ++it) {
    const double dx = it->x - center.x, dy = it->y - center.y;
    if (dx * dx + dy * dy <= r2) ++count;
  }
  return count;
}

DensityEstimate upper_beurling_density(const PointSet2D& s, const std::vector<double>& radii) {
  if (radii.empty()) throw Error(ErrorCode::EmptyInput, "no radii given");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] > 0.0)) throw Error(ErrorCode::InvalidArgument, "radii must be positive");
    if (i > 0 && !(radii[i] > radii[i - 1])) throw Error(ErrorCode::InvalidArgument, "radii must increase");
  }
  const Rect& w = s.window();
  const double inradius = 0.5 * std::min(w.x1 - w.x0, w.y1 - w.y0);
  if (radii.back() > 0.5 * inradius) {
    throw Error(ErrorCode::RadiusExceedsWindow, "largest radius exceeds half the window inradius");
  }

  DensityEstimate est;
  for (double r : radii) {
    const double spacing = r * est.center_spacing_ratio;
    const double area = kPi * r * r;
    DensityEstimate::PerRadius row;
    row.radius = r;
    const long nx = static_cast<long>(std::floor((w.x1 - w.x0 - 2 * r) / spacing + 1e-9));
    const long ny = static_cast<long>(std::floor((w.y1 - w.y0 - 2 * r) / spacing + 1e-9));
    for (long i = 0; i <= nx; ++i) {
      for (long j = 0; j <= ny; ++j) {
        const Point2 c{w.x0 + r + static_cast<double>(i) * spacing, w.y0 + r + static_cast<double>(j) * spacing};
        const double dens = static_cast<double>(s.count_in_ball(c, r)) / area;
        ++row.centers;
        if (dens > row.density) {
          row.density = dens;
          row.best_center = c;
        }
      }
    }
    est.per_radius.push_back(row);
  }
  const std::size_t n = est.per_radius.size();
  est.estimate = est.per_radius[n - 1].density;
  if (n >= 2) est.estimate = std::max(est.estimate, est.per_radius[n - 2].density);
  return est;
}

double product_progression_bound(double theta) {
  const double q = theta / (kPi / 2.0);
  if (std::abs(q - std::round(q)) < 1e-12) {
    throw Error(ErrorCode::DegenerateAngle, "theta is a multiple of pi/2");
  }
  return std::abs(std::sin(theta) * std::cos(theta));
}

ProgressionFit progression_containment(const std::vector<double>& A, double spacing, double offset_tol) {
  if (A.empty()) throw Error(ErrorCode::EmptyInput, "empty set");
  if (!(spacing > 0.0)) throw Error(ErrorCode::InvalidArgument, "spacing must be positive");
  std::complex<double> mean{};
  for (double a : A) mean += std::polar(1.0, 2.0 * kPi * a / spacing);
  ProgressionFit fit;
  double phi = std::arg(mean) / (2.0 * kPi) * spacing;
  if (phi < 0) phi += spacing;
  if (phi >= spacing) phi -= spacing;
  fit.offset = phi;
  for (double a : A) {
    const double u = (a - phi) / spacing;
    fit.max_deviation = std::max(fit.max_deviation, std::abs(u - std::round(u)) * spacing);
  }
  fit.contained = fit.max_deviation <= offset_tol;
  return fit;
}

}  // namespace gaborlat
