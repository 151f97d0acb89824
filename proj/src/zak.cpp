#include "gaborlat/zak.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gaborlat/error.hpp"
#include "gaborlat/fft.hpp"
#include "gaborlat/oscillatory.hpp"

namespace gaborlat {

namespace {

constexpr double kPi = std::numbers::pi;

double median_of(std::vector<double> v) {
  if (v.empty()) return 0.0;
  const std::size_t mid = v.size() / 2;
  std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
  double m = v[mid];
  if (v.size() % 2 == 0) {
    m = 0.5 * (m + *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid)));
  }
  return m;
}

std::vector<double> omega_grid(std::size_t n) {
  if (n < 8) throw Error(ErrorCode::InvalidArgument, "omega grid needs at least 8 points");
  std::vector<double> omega(n);
  for (std::size_t i = 0; i < n; ++i) omega[i] = static_cast<double>(i) / static_cast<double>(n);
  return omega;
}

double sinc(double x) { return std::abs(x) < 1e-8 ? 1.0 - x * x / 6.0 : std::sin(x) / x; }

std::pair<std::size_t, std::size_t> row_range(std::size_t rows, bool interior_only) {
  if (interior_only && rows > 2) return {1, rows - 1};
  return {0, rows};
}

}  // namespace

std::vector<Complex> gamma_weights(double alpha, int K) {
  if (K < 0) throw Error(ErrorCode::InvalidArgument, "K must be non-negative");
  std::vector<Complex> out(static_cast<std::size_t>(2 * K + 1));
  for (int k = -K; k <= K; ++k) {
    // k(k−1)α is reduced mod 2 before scaling so large K keeps full precision.
    const double e = std::fmod(alpha * static_cast<double>(k) * static_cast<double>(k - 1), 2.0);
    out[static_cast<std::size_t>(k + K)] = std::polar(1.0, kPi * e);
  }
  return out;
}

Complex fourier_transform(const Window& g, double xi) {
  if (g.is_piecewise()) {
    Complex total{};
    for (const auto& p : g.piecewise().pieces) {
      const double amp = std::sqrt(to_double(p.modulus_sq));
      const double A = kPi * p.phase.quad;
      const double B = 2.0 * kPi * (p.phase.lin - xi);
      total += amp * std::polar(1.0, p.phase.constant) *
               quadratic_phase_integral(A, B, to_double(p.interval.lo), to_double(p.interval.hi));
    }
    return total;
  }
  const auto& s = g.sampled();
  Complex total{};
  for (std::size_t j = 0; j < s.values.size(); ++j) {
    total += s.values[j] * std::polar(1.0, -2.0 * kPi * std::fmod(xi * s.t(j), 1.0));
  }
  return total * s.step * sinc(kPi * xi * s.step);
}

namespace {

// ĝ(ω + k) for k = k0 .. k0 + m − 1 from a sampled window via chirp-z.
std::vector<Complex> sampled_spectrum_row(const SampledWindow& s, double omega, int k0, std::size_t m) {
  const double xi0 = omega + k0;
  std::vector<Complex> x(s.values.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    x[j] = s.values[j] * std::polar(1.0, -2.0 * kPi * std::fmod(xi0 * s.step * static_cast<double>(j), 1.0));
  }
  auto X = chirp_z(x, s.step, m);
  for (std::size_t k = 0; k < m; ++k) {
    const double xi = xi0 + static_cast<double>(k);
    X[k] *= std::polar(1.0, -2.0 * kPi * std::fmod(xi * s.t_min, 1.0)) * s.step * sinc(kPi * xi * s.step);
  }
  return X;
}

}  // namespace

SpectralSamples spectral_samples(const Window& g, int K, std::size_t omega_points) {
  if (K < 0) throw Error(ErrorCode::InvalidArgument, "K must be non-negative");
  if (g.is_piecewise()) {
    auto spec = spectral_samples([&g](double xi) { return fourier_transform(g, xi); }, K, omega_points,
                                 SpectralSamples::Source::ClosedForm);
    return spec;
  }
  SpectralSamples spec;
  spec.K = K;
  spec.omega = omega_grid(omega_points);
  spec.source = SpectralSamples::Source::DiscreteTransform;
  const std::size_t width = static_cast<std::size_t>(2 * K + 1);
  for (double w : spec.omega) {
    auto row = sampled_spectrum_row(g.sampled(), w, -K, width + 1);
    spec.sheet0.emplace_back(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(width));
    spec.sheet1.emplace_back(row.begin() + 1, row.end());
  }
  return spec;
}

SpectralSamples spectral_samples(const std::function<Complex(double)>& ghat, int K, std::size_t omega_points,
                                 SpectralSamples::Source source) {
  if (K < 0) throw Error(ErrorCode::InvalidArgument, "K must be non-negative");
  SpectralSamples spec;
  spec.K = K;
  spec.omega = omega_grid(omega_points);
  spec.source = source;
  const std::size_t width = static_cast<std::size_t>(2 * K + 1);
  for (double w : spec.omega) {
    std::vector<Complex> row(width + 1);
    for (int k = -K; k <= K + 1; ++k) row[static_cast<std::size_t>(k + K)] = ghat(k + w);
    spec.sheet0.emplace_back(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(width));
    spec.sheet1.emplace_back(row.begin() + 1, row.end());
  }
  return spec;
}

Complex ZakGrid::evaluate(std::size_t i, double theta_value) const {
  const auto& c = coefficients.at(i);
  Complex total{};
  for (int k = -K; k <= K; ++k) {
    total += c[static_cast<std::size_t>(k + K)] *
             std::polar(1.0, 2.0 * kPi * std::fmod(static_cast<double>(k) * theta_value, 1.0));
  }
  return total;
}

ZakGrid compute_D(const SpectralSamples& spec, double alpha, std::size_t theta_points, Summation summation) {
  if (theta_points < 8) throw Error(ErrorCode::InvalidArgument, "theta grid needs at least 8 points");
  if (spec.sheet0.size() != spec.omega.size() || spec.sheet1.size() != spec.omega.size()) {
    throw Error(ErrorCode::InvalidArgument, "spectral samples are incomplete");
  }
  const int K = spec.K;
  const std::size_t M = theta_points;
  ZakGrid zak;
  zak.omega = spec.omega;
  zak.theta.resize(M);
  for (std::size_t j = 0; j < M; ++j) zak.theta[j] = static_cast<double>(j) / static_cast<double>(M);
  zak.alpha = alpha;
  zak.K = K;
  zak.summation = summation;
  zak.sheet0.resize(zak.omega.size() * M);
  zak.sheet1.resize(zak.omega.size() * M);

  const auto gamma = gamma_weights(alpha, K);
  std::vector<double> w(gamma.size(), 1.0);
  if (summation == Summation::Cesaro) {
    for (int k = -K; k <= K; ++k) {
      w[static_cast<std::size_t>(k + K)] = 1.0 - std::abs(k) / static_cast<double>(K + 1);
    }
  }

  auto fold = [&](const std::vector<Complex>& h, std::vector<Complex>* coeffs) {
    std::vector<Complex> bins(M);
    for (int k = -K; k <= K; ++k) {
      const std::size_t idx = static_cast<std::size_t>(k + K);
      const Complex c = w[idx] * gamma[idx] * h.at(idx);
      if (coeffs) (*coeffs)[idx] = c;
      const long r = ((static_cast<long>(k) % static_cast<long>(M)) + static_cast<long>(M)) % static_cast<long>(M);
      bins[static_cast<std::size_t>(r)] += c;
    }
    fft_inplace(bins, true);
    return bins;
  };

  zak.coefficients.resize(zak.omega.size(), std::vector<Complex>(gamma.size()));
  for (std::size_t i = 0; i < zak.omega.size(); ++i) {
    const auto row0 = fold(spec.sheet0[i], &zak.coefficients[i]);
    const auto row1 = fold(spec.sheet1[i], nullptr);
    std::copy(row0.begin(), row0.end(), zak.sheet0.begin() + static_cast<std::ptrdiff_t>(i * M));
    std::copy(row1.begin(), row1.end(), zak.sheet1.begin() + static_cast<std::ptrdiff_t>(i * M));
  }
  return zak;
}

DeviationReport check_unimodular(const ZakGrid& zak, double tol, bool interior_only) {
  const auto [lo, hi] = row_range(zak.omega.size(), interior_only);
  std::vector<double> dev;
  dev.reserve((hi - lo) * zak.theta.size());
  for (std::size_t i = lo; i < hi; ++i) {
    for (std::size_t j = 0; j < zak.theta.size(); ++j) dev.push_back(std::abs(std::abs(zak.at(i, j)) - 1.0));
  }
  DeviationReport r;
  r.max = dev.empty() ? 0.0 : *std::max_element(dev.begin(), dev.end());
  r.median = median_of(std::move(dev));
  r.pass = r.median < tol;
  return r;
}

DeviationReport check_covariance(const ZakGrid& zak, double tol, bool interpolate, bool interior_only) {
  const std::size_t M = zak.theta.size();
  const double steps = zak.alpha * static_cast<double>(M);
  const double nearest = std::round(steps);
  const bool aligned = std::abs(steps - nearest) < 1e-9 * std::max(1.0, std::abs(steps));
  if (!aligned && !interpolate) {
    throw Error(ErrorCode::GridIncompatible, "alpha is not a multiple of the theta step");
  }
  const long Ml = static_cast<long>(M);
  const long shift = aligned ? ((static_cast<long>(nearest) % Ml) + Ml) % Ml : 0;

  const auto [lo, hi] = row_range(zak.omega.size(), interior_only);
  std::vector<double> res;
  res.reserve((hi - lo) * M);
  for (std::size_t i = lo; i < hi; ++i) {
    for (std::size_t j = 0; j < M; ++j) {
      const double theta = zak.theta[j];
      Complex back;
      if (aligned) {
        back = zak.at(i, static_cast<std::size_t>((static_cast<long>(j) - shift + Ml) % Ml));
      } else {
        back = zak.evaluate(i, theta - zak.alpha);
      }
      const Complex phase = std::polar(1.0, 2.0 * kPi * (zak.alpha - theta));
      res.push_back(std::abs(zak.shifted(i, j) - phase * back));
    }
  }
  DeviationReport r;
  r.max = res.empty() ? 0.0 : *std::max_element(res.begin(), res.end());
  r.median = median_of(std::move(res));
  r.pass = r.max < tol;
  return r;
}

Complex autocorrelation(const SpectralSamples& spec, double alpha, int n, std::size_t omega_index) {
  const int K = spec.K;
  const auto gamma = gamma_weights(alpha, K);
  const auto& h = spec.sheet0.at(omega_index);
  auto b = [&](int k) { return gamma[static_cast<std::size_t>(k + K)] * h[static_cast<std::size_t>(k + K)]; };
  Complex total{};
  for (int k = std::max(-K, n - K); k <= std::min(K, n + K); ++k) total += b(k - n) * std::conj(b(k));
  return total;
}

Complex autocorrelation_from_grid(const ZakGrid& zak, int n, std::size_t omega_index) {
  const std::size_t M = zak.theta.size();
  Complex total{};
  for (std::size_t j = 0; j < M; ++j) {
    const double p = std::norm(zak.at(omega_index, j));
    const double e = std::fmod(static_cast<double>(n) * static_cast<double>(j), static_cast<double>(M));
    total += p * std::polar(1.0, 2.0 * kPi * e / static_cast<double>(M));
  }
  return total / static_cast<double>(M);
}

SupportEstimate spectrum_support(const SampledWindow& F, const std::vector<double>& band_limit_candidates,
                                 double epsilon) {
  const std::size_t N = F.values.size();
  if (N < 2) throw Error(ErrorCode::EmptyInput, "need at least two samples");
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw Error(ErrorCode::InvalidArgument, "epsilon must lie in (0, 1)");

  std::vector<Complex> x(N);
  for (std::size_t j = 0; j < N; ++j) {
    const double hann = 0.5 * (1.0 - std::cos(2.0 * kPi * static_cast<double>(j) / static_cast<double>(N)));
    x[j] = hann * F.values[j];
  }
  fft_inplace(x, false);

  const double bin = 1.0 / (static_cast<double>(N) * F.step);
  // Bins ordered by frequency: k = −N/2 .. N/2 − 1.
  std::vector<double> freq(N), energy(N);
  double total = 0.0;
  for (std::size_t i = 0; i < N; ++i) {
    const long k = static_cast<long>(i) - static_cast<long>(N / 2);
    const std::size_t src = static_cast<std::size_t>((k + static_cast<long>(N)) % static_cast<long>(N));
    freq[i] = static_cast<double>(k) * bin;
    energy[i] = std::norm(x[src]);
    total += energy[i];
  }

  SupportEstimate est;
  est.bin_width = bin;
  if (total == 0.0) return est;
  const double need = (1.0 - epsilon) * total;

  // Shortest contiguous run of bins holding `need`.
  std::size_t best_lo = 0, best_hi = N - 1;
  double acc = 0.0;
  std::size_t left = 0;
  for (std::size_t right = 0; right < N; ++right) {
    acc += energy[right];
    while (left < right && acc - energy[left] >= need) acc -= energy[left++];
    if (acc >= need && right - left < best_hi - best_lo) {
      best_lo = left;
      best_hi = right;
    }
  }
  est.lo = freq[best_lo];
  est.hi = freq[best_hi];

  std::vector<std::size_t> order(N);
  for (std::size_t i = 0; i < N; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::abs(freq[a]) < std::abs(freq[b]);
  });
  acc = 0.0;
  for (std::size_t i : order) {
    acc += energy[i];
    est.radius = std::abs(freq[i]);
    if (acc >= need) break;
  }

  for (double B : band_limit_candidates) {
    double inside = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
      if (std::abs(freq[i]) <= B + 1e-12 * bin) inside += energy[i];
    }
    est.candidate_fractions.emplace_back(B, inside / total);
  }
  return est;
}

ExponentialFit exponential_fit(const SampledWindow& F) {
  const std::size_t N = F.values.size();
  if (N < 2) throw Error(ErrorCode::EmptyInput, "need at least two samples");
  for (const auto& v : F.values) {
    if (std::abs(std::abs(v) - 1.0) > 0.1) throw Error(ErrorCode::NotUnimodular, "|F| deviates from 1 by more than 0.1");
  }
  std::vector<double> inc(N - 1);
  for (std::size_t j = 0; j + 1 < N; ++j) {
    inc[j] = std::arg(F.values[j + 1] * std::conj(F.values[j])) / (2.0 * kPi * F.step);
  }
  ExponentialFit fit;
  fit.lambda = median_of(std::move(inc));
  Complex mean{};
  for (std::size_t j = 0; j < N; ++j) {
    mean += F.values[j] * std::polar(1.0, -2.0 * kPi * fit.lambda * F.t(j));
  }
  fit.c = mean / static_cast<double>(N);
  for (std::size_t j = 0; j < N; ++j) {
    const Complex model = fit.c * std::polar(1.0, 2.0 * kPi * fit.lambda * F.t(j));
    fit.residual = std::max(fit.residual, std::abs(F.values[j] - model));
  }
  return fit;
}

std::vector<Complex> modulus_chain(Complex c0, Complex kappa, double alpha, std::size_t count) {
  std::vector<Complex> c;
  if (count == 0) return c;
  c.reserve(count);
  c.push_back(c0);
  for (std::size_t m = 0; m + 1 < count; ++m) {
    const double e = std::fmod(static_cast<double>(m) * alpha, 1.0);
    c.push_back(std::conj(kappa) * std::polar(1.0, 2.0 * kPi * e) * c.back());
  }
  return c;
}

}  // namespace gaborlat
