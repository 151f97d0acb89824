#include "gaborlat/window.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gaborlat/error.hpp"

namespace gaborlat {

namespace {

constexpr double kPi = std::numbers::pi;

std::complex<double> piece_value(const WindowPiece& p, double t) {
  const double phase =
      kPi * (p.phase.quad * t * t + 2.0 * p.phase.lin * t) + p.phase.constant;
  return std::polar(std::sqrt(p.modulus_sq.get_d()), phase);
}

}  // namespace

Window::Window(PiecewiseWindow form) {
  for (auto& p : form.pieces) {
    p.interval.lo.canonicalize();
    p.interval.hi.canonicalize();
    p.modulus_sq.canonicalize();
  }
  std::sort(form.pieces.begin(), form.pieces.end(),
            [](const WindowPiece& x, const WindowPiece& y) { return x.interval.lo < y.interval.lo; });
  for (std::size_t i = 0; i < form.pieces.size(); ++i) {
    const WindowPiece& p = form.pieces[i];
    if (!(p.interval.lo < p.interval.hi)) {
      throw Error(ErrorCode::InvalidArgument, "window piece has an empty interval");
    }
    if (!(p.modulus_sq > 0)) throw Error(ErrorCode::InvalidArgument, "window modulus must be positive");
    if (i > 0 && p.interval.lo < form.pieces[i - 1].interval.hi) {
      throw Error(ErrorCode::InvalidArgument, "window pieces overlap");
    }
  }
  form_ = std::move(form);
}

Window::Window(SampledWindow form) {
  if (!(form.step > 0.0) || !std::isfinite(form.t_min)) {
    throw Error(ErrorCode::InvalidArgument, "sampled window needs a positive step");
  }
  if (form.values.size() < 2) throw Error(ErrorCode::InvalidArgument, "sampled window needs >= 2 samples");
  form_ = std::move(form);
}

Window Window::indicator(const Rational& lo, const Rational& hi, const Rational& modulus_sq) {
  return Window(PiecewiseWindow{{WindowPiece{{lo, hi}, modulus_sq, {}}}});
}

const PiecewiseWindow& Window::piecewise() const {
  if (const auto* p = std::get_if<PiecewiseWindow>(&form_)) return *p;
  throw Error(ErrorCode::InvalidArgument, "window is not in piecewise form");
}

const SampledWindow& Window::sampled() const {
  if (const auto* s = std::get_if<SampledWindow>(&form_)) return *s;
  throw Error(ErrorCode::InvalidArgument, "window is not in sampled form");
}

std::complex<double> Window::operator()(double t) const {
  if (const auto* pw = std::get_if<PiecewiseWindow>(&form_)) {
    for (const auto& p : pw->pieces) {
      if (p.interval.lo.get_d() <= t && t < p.interval.hi.get_d()) return piece_value(p, t);
    }
    return 0.0;
  }
  const SampledWindow& s = std::get<SampledWindow>(form_);
  const double u = (t - s.t_min) / s.step;
  const long n = static_cast<long>(s.values.size());
  auto at = [&](long j) { return (j >= 0 && j < n) ? s.values[j] : std::complex<double>(0.0); };
  const double nearest = std::round(u);
  if (std::fabs(u - nearest) < 1e-9) return at(static_cast<long>(nearest));
  const long base = static_cast<long>(std::floor(u));
  if (base + 3 < 0 || base - 2 >= n) return 0.0;
  // Lagrange through nodes base−2 .. base+3.
  std::complex<double> acc = 0.0;
  for (long i = base - 2; i <= base + 3; ++i) {
    double w = 1.0;
    for (long k = base - 2; k <= base + 3; ++k) {
      if (k != i) w *= (u - double(k)) / double(i - k);
    }
    acc += w * at(i);
  }
  return acc;
}

std::optional<Rational> Window::exact_norm_sq() const {
  const auto* pw = std::get_if<PiecewiseWindow>(&form_);
  if (!pw) return std::nullopt;
  Rational total = 0;
  for (const auto& p : pw->pieces) total += p.modulus_sq * p.interval.length();
  return total;
}

double Window::norm_sq() const {
  if (auto exact = exact_norm_sq()) return exact->get_d();
  const SampledWindow& s = std::get<SampledWindow>(form_);
  double total = 0.0;
  for (const auto& v : s.values) total += std::norm(v);
  return total * s.step;
}

SampledWindow Window::sample(double t_min, double step, std::size_t n) const {
  SampledWindow out{t_min, step, {}};
  out.values.reserve(n);
  for (std::size_t j = 0; j < n; ++j) out.values.push_back((*this)(out.t(j)));
  return out;
}

IntervalSet ModulusProfile::support() const {
  std::vector<Interval> ivs;
  ivs.reserve(runs.size());
  for (const auto& r : runs) ivs.push_back(r.interval);
  return IntervalSet(std::move(ivs));
}

namespace {

ModulusProfile profile_piecewise(const PiecewiseWindow& pw) {
  ModulusProfile out;
  for (const auto& p : pw.pieces) {
    if (!out.runs.empty() && out.runs.back().interval.hi == p.interval.lo &&
        out.runs.back().modulus_sq == p.modulus_sq) {
      out.runs.back().interval.hi = p.interval.hi;
    } else {
      out.runs.push_back({p.interval, p.modulus_sq});
    }
  }
  return out;
}

ModulusProfile profile_sampled(const SampledWindow& s, const FlatnessOptions& opts) {
  std::vector<double> mod(s.values.size());
  double peak = 0.0;
  for (std::size_t j = 0; j < mod.size(); ++j) {
    mod[j] = std::abs(s.values[j]);
    peak = std::max(peak, mod[j]);
  }
  ModulusProfile out;
  if (peak == 0.0) return out;
  const double zero = opts.zero_threshold * peak;
  auto cell_edge = [&](std::size_t j) {
    return best_rational_approximation(s.t(j) - 0.5 * s.step, opts.max_denominator);
  };
  std::size_t j = 0;
  while (j < mod.size()) {
    if (mod[j] <= zero) {
      ++j;
      continue;
    }
    const std::size_t start = j;
    const double ref = mod[j];
    while (j < mod.size() && mod[j] > zero && std::fabs(mod[j] - ref) < opts.relative_tol * ref) ++j;
    std::vector<double> run(mod.begin() + static_cast<long>(start), mod.begin() + static_cast<long>(j));
    if (run.size() < opts.min_run) {
      throw Error(ErrorCode::NotPiecewiseConstant,
                  "modulus not flat near t = " + std::to_string(s.t(start)));
    }
    std::nth_element(run.begin(), run.begin() + static_cast<long>(run.size() / 2), run.end());
    const double median = run[run.size() / 2];
    for (std::size_t k = start; k < j; ++k) {
      if (std::fabs(mod[k] - median) >= opts.relative_tol * median) {
        throw Error(ErrorCode::NotPiecewiseConstant,
                    "modulus not flat near t = " + std::to_string(s.t(k)));
      }
    }
    const Rational level = best_rational_approximation(median * median, opts.max_denominator);
    Interval iv{cell_edge(start), cell_edge(j)};
    if (!out.runs.empty() && out.runs.back().interval.hi == iv.lo &&
        out.runs.back().modulus_sq == level) {
      out.runs.back().interval.hi = iv.hi;
    } else {
      out.runs.push_back({iv, level});
    }
  }
  return out;
}

}  // namespace

ModulusProfile modulus_profile(const Window& g, const FlatnessOptions& opts) {
  if (g.is_piecewise()) return profile_piecewise(g.piecewise());
  return profile_sampled(g.sampled(), opts);
}

const char* to_string(WindowVerdict::Reason reason) {
  switch (reason) {
    case WindowVerdict::Reason::OK: return "OK";
    case WindowVerdict::Reason::DenseProjection: return "DenseProjection";
    case WindowVerdict::Reason::DensityNotOne: return "DensityNotOne";
    case WindowVerdict::Reason::ModulusNotConstant: return "ModulusNotConstant";
    case WindowVerdict::Reason::WrongConstant: return "WrongConstant";
    case WindowVerdict::Reason::NotATiling: return "NotATiling";
  }
  return "?";
}

WindowVerdict characterize_window(const Window& g, const FieldScalar& a, const FlatnessOptions& opts) {
  if (a.sign() <= 0) throw Error(ErrorCode::InvalidArgument, "period a must be positive");
  WindowVerdict out;
  out.generator = a;
  const ModulusProfile profile = modulus_profile(g, opts);
  if (profile.runs.empty()) {
    out.reason = WindowVerdict::Reason::WrongConstant;
    return out;
  }
  const Rational& level = profile.runs.front().modulus_sq;
  for (const auto& run : profile.runs) {
    if (run.modulus_sq != level) {
      out.reason = WindowVerdict::Reason::ModulusNotConstant;
      return out;
    }
  }
  // |g|² = 1/a, compared in the field (an irrational a never matches).
  if (FieldScalar(level) * a != FieldScalar(1)) {
    out.reason = WindowVerdict::Reason::WrongConstant;
    return out;
  }
  const TilingResult tiling = tiles_by(profile.support(), a.as_rational());
  out.fold = tiling.profile;
  if (!tiling.tiles) {
    out.reason = WindowVerdict::Reason::NotATiling;
    return out;
  }
  out.is_onb_window = true;
  out.reason = WindowVerdict::Reason::OK;
  return out;
}

Window apply_chirp(const Window& g, double mu, double nu) {
  if (mu == 0.0 || !std::isfinite(mu) || !std::isfinite(nu)) {
    throw Error(ErrorCode::ZeroMu, "chirp needs a finite nonzero mu");
  }
  const double rate = nu / mu;
  if (g.is_piecewise()) {
    const Rational mu_q = rational_from_double(mu);
    const Rational abs_mu = abs(mu_q);
    PiecewiseWindow out;
    for (const auto& p : g.piecewise().pieces) {
      WindowPiece np;
      np.interval = mu_q > 0 ? Interval{p.interval.lo * mu_q, p.interval.hi * mu_q}
                             : Interval{p.interval.hi * mu_q, p.interval.lo * mu_q};
      np.modulus_sq = p.modulus_sq / abs_mu;
      // Phase of g(t/μ) plus the new chirp.
      np.phase.quad = p.phase.quad / (mu * mu) + rate;
      np.phase.lin = p.phase.lin / mu;
      np.phase.constant = p.phase.constant;
      out.pieces.push_back(std::move(np));
    }
    return Window(std::move(out));
  }
  const SampledWindow& s = g.sampled();
  const double scale = 1.0 / std::sqrt(std::fabs(mu));
  SampledWindow out;
  out.step = std::fabs(mu) * s.step;
  const std::size_t n = s.values.size();
  out.values.resize(n);
  out.t_min = mu > 0 ? mu * s.t_min : mu * s.t_max();
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t src = mu > 0 ? j : n - 1 - j;
    const double t = out.t(j);
    out.values[j] = scale * std::polar(1.0, kPi * rate * t * t) * s.values[src];
  }
  return Window(std::move(out));
}

WindowVerdict decide_onb(const Window& g, const Lattice2D& lattice, const FlatnessOptions& opts) {
  if (lattice.backend() != Backend::Exact) {
    throw Error(ErrorCode::ExactBackendRequired, "decide_onb refuses float lattices");
  }
  WindowVerdict out;
  const FieldScalar det = lattice.exact_basis().det();
  if (abs(det) != FieldScalar(1)) {
    out.reason = WindowVerdict::Reason::DensityNotOne;
    return out;
  }
  const OrientedLattice oriented = orient_positive(lattice);
  const ProjectionResult proj = project_first(oriented.lattice);
  if (proj.kind != ProjectionResult::Kind::Discrete) {
    out.reason = WindowVerdict::Reason::DenseProjection;
    out.columns_swapped = oriented.columns_swapped;
    return out;
  }
  out = characterize_window(g, *proj.generator, opts);
  out.columns_swapped = oriented.columns_swapped;
  return out;
}

}  // namespace gaborlat
