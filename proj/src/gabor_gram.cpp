#include "gaborlat/gabor_gram.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gaborlat/error.hpp"
#include "gaborlat/oscillatory.hpp"

namespace gaborlat {

namespace {

constexpr double kPi = std::numbers::pi;

std::complex<double> closed_form(const PiecewiseWindow& w, const TimeFreqPoint& p,
                                 const TimeFreqPoint& q) {
  // ∫ e^{2πi(s_q − s_p)x} g(x − t_q) conj(g(x − t_p)) dx, one piece pair at a time.
  const double t = q.t, tp = p.t;
  const double ds = q.s - p.s;
  std::complex<double> total = 0.0;
  for (const auto& pj : w.pieces) {
    const double lo_j = pj.interval.lo.get_d() + t;
    const double hi_j = pj.interval.hi.get_d() + t;
    for (const auto& pk : w.pieces) {
      const double lo = std::max(lo_j, pk.interval.lo.get_d() + tp);
      const double hi = std::min(hi_j, pk.interval.hi.get_d() + tp);
      if (!(lo < hi)) continue;
      const QuadraticPhase& a = pj.phase;
      const QuadraticPhase& b = pk.phase;
      const double A = kPi * (a.quad - b.quad);
      const double B = 2.0 * kPi * ds + 2.0 * kPi * (-a.quad * t + a.lin + b.quad * tp - b.lin);
      const double C = kPi * (a.quad * t * t - b.quad * tp * tp) - 2.0 * kPi * (a.lin * t - b.lin * tp) +
                       a.constant - b.constant;
      const double amp = std::sqrt(Rational(pj.modulus_sq * pk.modulus_sq).get_d());
      total += amp * std::polar(1.0, C) * quadratic_phase_integral(A, B, lo, hi);
    }
  }
  return total;
}

double sinc(double x) { return std::fabs(x) < 1e-8 ? 1.0 - x * x / 6.0 : std::sin(x) / x; }

// Sample indices j where g jumps between j − 1 and j.
std::vector<long> jump_indices(const SampledWindow& s) {
  const long n = static_cast<long>(s.values.size());
  double gmax = 0.0;
  for (const auto& v : s.values) gmax = std::max(gmax, std::abs(v));
  std::vector<long> out;
  const auto diff = [&](long j) { return (j <= 0 || j >= n) ? 0.0 : std::abs(s.values[j] - s.values[j - 1]); };
  for (long j = 1; j < n; ++j) {
    const double d = diff(j);
    if (d > 1e-3 * gmax && d > 8.0 * std::max(diff(j - 1), diff(j + 1))) out.push_back(j);
  }
  return out;
}

struct ProductSum {
  std::complex<double> fine = 0.0;
  std::complex<double> extrapolated = 0.0;
};

// Cell-rule sum of e^{2πiΔs y} g(y) conj(g(y + d)) on the sample grid. The extrapolated value
// combines it with a 3h cell rule laid out inside each smooth run of the integrand.
ProductSum sampled_sum(const Window& g, const SampledWindow& s, double d, double ds, bool richardson) {
  const double h = s.step;
  const double shift_steps = d / h;
  const double rounded = std::round(shift_steps);
  const bool aligned = std::fabs(shift_steps - rounded) < 1e-9;
  const long offset = static_cast<long>(rounded);
  const long n = static_cast<long>(s.values.size());
  std::vector<std::complex<double>> f(static_cast<std::size_t>(n));
  for (long j = 0; j < n; ++j) {
    const std::complex<double> a = s.values[j];
    if (a == 0.0) continue;
    std::complex<double> b;
    if (aligned) {
      const long k = j + offset;
      if (k < 0 || k >= n) continue;
      b = s.values[k];
    } else {
      b = g(s.t(j) + d);
    }
    f[j] = a * std::conj(b);
  }
  const auto term = [&](long j, double width) {
    return std::polar(1.0, 2.0 * kPi * ds * s.t(j)) * f[j] * width * sinc(kPi * ds * width);
  };
  ProductSum out;
  for (long j = 0; j < n; ++j) {
    if (f[j] != 0.0) out.fine += term(j, h);
  }
  if (!richardson) return out;

  std::vector<long> cuts{0, n};
  for (long j : jump_indices(s)) {
    cuts.push_back(j);
    cuts.push_back(j - offset);
  }
  if (aligned) {
    cuts.push_back(-offset);
    cuts.push_back(n - offset);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::complex<double> coarse = 0.0;
  for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
    const long lo = std::max(cuts[c], 0L);
    const long hi = std::min(cuts[c + 1], n);
    long j = lo;
    for (; j + 3 <= hi; j += 3) coarse += term(j + 1, 3.0 * h);
    // Cells left over at the end of a run get a corrected midpoint value in both sums.
    for (; j < hi; ++j) {
      std::complex<double> cell = term(j, h);
      if (hi - lo >= 3) {
        const long k = std::clamp(j, lo + 1, hi - 2);
        const std::complex<double> slope = f[k + 1] - f[k - 1];
        const std::complex<double> curve = f[k + 1] - 2.0 * f[k] + f[k - 1];
        const std::complex<double> iw(0.0, 2.0 * kPi * ds);
        cell += std::polar(1.0, 2.0 * kPi * ds * s.t(j)) * (iw * h * h / 24.0 * slope + h / 24.0 * curve);
      }
      coarse += cell;
      out.fine += cell - term(j, h);
    }
  }
  out.extrapolated = (9.0 * out.fine - coarse) / 8.0;
  return out;
}

std::complex<double> quadrature(const Window& g, const TimeFreqPoint& p, const TimeFreqPoint& q,
                                const QuadratureOptions& opts) {
  const SampledWindow& s = g.sampled();
  const double ds = q.s - p.s;
  if (std::fabs(ds) * s.step > opts.nyquist_limit) {
    throw Error(ErrorCode::GridTooCoarse, "frequency offset " + std::to_string(ds) +
                                              " is too large for step " + std::to_string(s.step));
  }
  // y = x − t_q: e^{2πiΔs t_q} ∫ e^{2πiΔs y} g(y) conj(g(y + t_q − t_p)) dy.
  const double d = q.t - p.t;
  const std::complex<double> lead = std::polar(1.0, 2.0 * kPi * ds * q.t);
  const ProductSum sum = sampled_sum(g, s, d, ds, opts.richardson);
  return lead * (opts.richardson ? sum.extrapolated : sum.fine);
}

}  // namespace

IndexSet IndexSet::from_basis(const FloatMatrix& basis, int radius) {
  if (radius < 0) throw Error(ErrorCode::InvalidArgument, "truncation radius must be >= 0");
  IndexSet out;
  for (int m = -radius; m <= radius; ++m) {
    for (int n = -radius; n <= radius; ++n) {
      out.points.push_back({basis.a * m + basis.b * n, basis.c * m + basis.d * n});
    }
  }
  return out;
}

std::complex<double> inner_product(const Window& g, const TimeFreqPoint& p, const TimeFreqPoint& q,
                                   const QuadratureOptions& opts) {
  if (g.is_piecewise()) return closed_form(g.piecewise(), p, q);
  return quadrature(g, p, q, opts);
}

GramMatrix gram_matrix(const Window& g, const IndexSet& idx, const QuadratureOptions& opts) {
  GramMatrix out;
  out.size = idx.points.size();
  out.entries.assign(out.size * out.size, 0.0);
  for (std::size_t i = 0; i < out.size; ++i) {
    for (std::size_t j = i; j < out.size; ++j) {
      const auto v = inner_product(g, idx.points[i], idx.points[j], opts);
      out.entries[i * out.size + j] = v;
      out.entries[j * out.size + i] = std::conj(v);
    }
    out.entries[i * out.size + i] = out.entries[i * out.size + i].real();
  }
  return out;
}

const char* to_string(GramMethod method) {
  return method == GramMethod::ClosedForm ? "closed_form" : "quadrature";
}

GramReport onb_certificate(const Window& g, const IndexSet& idx, double tol,
                           const QuadratureOptions& opts) {
  if (idx.points.empty()) throw Error(ErrorCode::EmptyInput, "empty index set");
  GramReport report;
  report.window_norm_sq = g.norm_sq();
  if (std::fabs(report.window_norm_sq - 1.0) > 0.5) {
    throw Error(ErrorCode::InvalidArgument,
                "window is far from normalized (norm^2 = " + std::to_string(report.window_norm_sq) + ")");
  }
  report.method = g.is_piecewise() ? GramMethod::ClosedForm : GramMethod::Quadrature;
  const GramMatrix G = gram_matrix(g, idx, opts);
  report.size = G.size;
  double worst = -1.0;
  for (std::size_t i = 0; i < G.size; ++i) {
    for (std::size_t j = i; j < G.size; ++j) {
      const double dev = i == j ? std::abs(G(i, j) - 1.0) : std::abs(G(i, j));
      if (i == j) {
        report.max_diag_dev = std::max(report.max_diag_dev, dev);
      } else {
        report.max_offdiag = std::max(report.max_offdiag, dev);
      }
      if (dev > worst) {
        worst = dev;
        report.worst_pair[0] = idx.points[i];
        report.worst_pair[1] = idx.points[j];
      }
    }
  }
  report.orthonormal_on_truncation = report.max_diag_dev < tol && report.max_offdiag < tol;
  report.completeness_note =
      "completeness is not checked numerically; for a density-one lattice it follows from the "
      "characterization once the window passes decide_onb";
  return report;
}

GramReport onb_certificate(const Window& g, const Lattice2D& lattice, int radius, double tol,
                           const QuadratureOptions& opts) {
  return onb_certificate(g, IndexSet::from_basis(lattice.float_basis(), radius), tol, opts);
}

}  // namespace gaborlat
