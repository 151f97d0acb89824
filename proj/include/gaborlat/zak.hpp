#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "gaborlat/window.hpp"

namespace gaborlat {

using Complex = std::complex<double>;

/// γ_k = e^{πiαk(k−1)} for k = −K..K (index k + K).
std::vector<Complex> gamma_weights(double alpha, int K);

/// ĝ(ξ) = ∫ g(x) e^{−2πixξ} dx; closed form for piecewise windows, cell rule
/// for sampled ones.
Complex fourier_transform(const Window& g, double xi);

/// h_k(ω) = ĝ(k + ω) for |k| ≤ K on ω_i = i/|grid|, plus the shifted sheet
/// ĝ(k + 1 + ω) used by the covariance relation.
struct SpectralSamples {
  enum class Source { ClosedForm, DiscreteTransform, Synthetic };
  int K = 0;
  std::vector<double> omega;
  std::vector<std::vector<Complex>> sheet0;  // [i][k + K]
  std::vector<std::vector<Complex>> sheet1;
  Source source = Source::ClosedForm;

  Complex h(std::size_t i, int k) const { return sheet0[i][static_cast<std::size_t>(k + K)]; }
};

SpectralSamples spectral_samples(const Window& g, int K, std::size_t omega_points = 128);
/// From an arbitrary ĝ, e.g. synthetic test spectra.
SpectralSamples spectral_samples(const std::function<Complex(double)>& ghat, int K,
                                 std::size_t omega_points,
                                 SpectralSamples::Source source = SpectralSamples::Source::Synthetic);

enum class Summation { Raw, Cesaro };

/// D(ω, θ) = Σ_{|k|≤K} w_k γ_k ĝ(k + ω) e^{2πikθ} on ω × {j/M}; w_k = 1 for
/// raw summation and 1 − |k|/(K+1) for Cesàro (Fejér) means.
struct ZakGrid {
  std::vector<double> omega;
  std::vector<double> theta;
  double alpha = 0.0;
  int K = 0;
  Summation summation = Summation::Cesaro;
  std::vector<Complex> sheet0;  // D(ω_i, θ_j) at i·|θ| + j
  std::vector<Complex> sheet1;  // D(ω_i + 1, θ_j)
  std::vector<std::vector<Complex>> coefficients;  // w_k γ_k h_k(ω_i), for off-grid evaluation

  Complex at(std::size_t i, std::size_t j) const { return sheet0[i * theta.size() + j]; }
  Complex shifted(std::size_t i, std::size_t j) const { return sheet1[i * theta.size() + j]; }
  /// Direct evaluation of the truncated series at any θ.
  Complex evaluate(std::size_t i, double theta_value) const;
};

ZakGrid compute_D(const SpectralSamples& spec, double alpha, std::size_t theta_points = 256,
                  Summation summation = Summation::Cesaro);

struct DeviationReport {
  double max = 0.0;
  double median = 0.0;
  bool pass = false;
};

/// max and median of ||D| − 1|; passes when the median is below tol. Interior
/// statistics drop the first and last ω rows.
DeviationReport check_unimodular(const ZakGrid& zak, double tol, bool interior_only = true);

/// Residual |D(ω+1, θ) − e^{2πi(α−θ)} D(ω, θ−α)|; passes when the max is
/// below tol. With α off the θ-grid, GridIncompatible unless `interpolate`,
/// in which case D(ω, θ−α) is summed directly.
DeviationReport check_covariance(const ZakGrid& zak, double tol, bool interpolate = false,
                                 bool interior_only = true);

/// r_n(ω_i) = Σ_k b_{k−n} conj(b_k), b_k = γ_k h_k(ω_i), over |k|, |k−n| ≤ K.
Complex autocorrelation(const SpectralSamples& spec, double alpha, int n, std::size_t omega_index);

/// The same r_n as the n-th Fourier coefficient of |D(ω_i, ·)|² on the θ-grid;
/// exact for raw summation once |θ-grid| > 4K.
Complex autocorrelation_from_grid(const ZakGrid& zak, int n, std::size_t omega_index);

struct SupportEstimate {
  double lo = 0.0;       // smallest interval holding 1 − ε of the energy
  double hi = 0.0;
  double radius = 0.0;   // smallest symmetric [−r, r] holding 1 − ε
  double bin_width = 0.0;
  /// Energy fraction inside [−B, B] for each candidate band limit B.
  std::vector<std::pair<double, double>> candidate_fractions;
};

/// Hann-tapered DFT energy profile of a sampled function. Diagnostic only.
SupportEstimate spectrum_support(const SampledWindow& F, const std::vector<double>& band_limit_candidates = {},
                                 double epsilon = 1e-4);

struct ExponentialFit {
  Complex c;
  double lambda = 0.0;
  double residual = 0.0;
};

/// F ≈ c·e^{2πiλt}: λ from the median phase increment, c from the mean of
/// F·e^{−2πiλt}. NotUnimodular when ||F| − 1| > 0.1 anywhere.
ExponentialFit exponential_fit(const SampledWindow& F);

/// c_{m+1} = conj(κ) e^{2πimα} c_m for m = 0..count−2.
std::vector<Complex> modulus_chain(Complex c0, Complex kappa, double alpha, std::size_t count);

}  // namespace gaborlat
