#pragma once

#include <complex>
#include <optional>
#include <variant>
#include <vector>

#include "gaborlat/lattice.hpp"
#include "gaborlat/tiling.hpp"

namespace gaborlat {

/// Phase e^{iπ(quad·t² + 2·lin·t) + i·constant}.
struct QuadraticPhase {
  double quad = 0.0;
  double lin = 0.0;
  double constant = 0.0;
};

/// g = √modulus_sq · phase on [lo, hi). The squared modulus is kept exact so
/// that |g| = 1/√a can be decided without tolerances.
struct WindowPiece {
  Interval interval;
  Rational modulus_sq;
  QuadraticPhase phase;
};

struct PiecewiseWindow {
  std::vector<WindowPiece> pieces;  // sorted, disjoint
};

/// Samples g(t_min + j·step), j = 0..n−1.
struct SampledWindow {
  double t_min = 0.0;
  double step = 1.0;
  std::vector<std::complex<double>> values;

  double t(std::size_t j) const { return t_min + static_cast<double>(j) * step; }
  double t_max() const { return t(values.empty() ? 0 : values.size() - 1); }
};

class Window {
 public:
  /// Validates support, positivity of the modulus and disjointness.
  explicit Window(PiecewiseWindow form);
  /// Validates a positive step and at least two samples.
  explicit Window(SampledWindow form);

  /// √modulus_sq · 1_{[lo, hi)}.
  static Window indicator(const Rational& lo, const Rational& hi, const Rational& modulus_sq = 1);

  bool is_piecewise() const { return std::holds_alternative<PiecewiseWindow>(form_); }
  bool is_sampled() const { return std::holds_alternative<SampledWindow>(form_); }
  const PiecewiseWindow& piecewise() const;
  const SampledWindow& sampled() const;

  /// Point value; sampled windows use 6-point Lagrange interpolation and are
  /// zero outside their grid.
  std::complex<double> operator()(double t) const;

  /// ‖g‖²; exact for piecewise windows.
  double norm_sq() const;
  std::optional<Rational> exact_norm_sq() const;

  /// Piecewise window sampled on t_min + j·step.
  SampledWindow sample(double t_min, double step, std::size_t n) const;

 private:
  std::variant<PiecewiseWindow, SampledWindow> form_;
};

/// Support of |g| split into runs of constant squared modulus.
struct ModulusProfile {
  struct Run {
    Interval interval;
    Rational modulus_sq;
  };
  std::vector<Run> runs;
  IntervalSet support() const;
};

/// Flatness detector settings for sampled windows.
struct FlatnessOptions {
  double relative_tol = 1e-6;
  long max_denominator = 1'000'000;
  std::size_t min_run = 4;
  double zero_threshold = 1e-9;  // relative to max |g|
};

/// Throws NotPiecewiseConstant when a sampled modulus is not flat.
ModulusProfile modulus_profile(const Window& g, const FlatnessOptions& opts = {});

struct WindowVerdict {
  enum class Reason { OK, DenseProjection, DensityNotOne, ModulusNotConstant, WrongConstant, NotATiling };
  bool is_onb_window = false;
  Reason reason = Reason::OK;
  std::optional<FoldProfile> fold;
  std::optional<FieldScalar> generator;
  bool columns_swapped = false;
};

const char* to_string(WindowVerdict::Reason reason);

/// |g| = a^{−1/2}·1_Ω with Ω tiling ℝ by aℤ. Phase is never inspected.
WindowVerdict characterize_window(const Window& g, const FieldScalar& a,
                                  const FlatnessOptions& opts = {});

/// (U_S g)(t) = |μ|^{−1/2} e^{iπ(ν/μ)t²} g(t/μ).
Window apply_chirp(const Window& g, double mu, double nu);

/// Density one, discrete first projection τℤ, then the window test with a = τ.
WindowVerdict decide_onb(const Window& g, const Lattice2D& lattice, const FlatnessOptions& opts = {});

}  // namespace gaborlat
