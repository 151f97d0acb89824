#pragma once

#include "gaborlat/window.hpp"

namespace gaborlat {

/// Symmetric midpoint grid t_j = −T + (j + ½)h, h = 2T/N, and a reduced angle.
class FrftPlan {
 public:
  enum class Branch { Special, Kernel };

  /// N must be a power of two ≥ 64 and T ≥ 4. Angles within 1e−3 of (π/2)ℤ
  /// but not within 1e−12 are rejected with AngleIllConditioned.
  FrftPlan(double theta, std::size_t n = 2048, double half_width = 8.0);

  double theta() const { return theta_; }
  std::size_t size() const { return n_; }
  double half_width() const { return half_width_; }
  double step() const { return 2.0 * half_width_ / double(n_); }
  double t(std::size_t j) const { return -half_width_ + (double(j) + 0.5) * step(); }
  Branch branch() const { return branch_; }
  /// Quarter turns 0..3 for the special branch.
  int quadrant() const { return quadrant_; }

  /// Samples `f` on the plan grid.
  template <typename F>
  SampledWindow sample(F&& f) const {
    SampledWindow out{t(0), step(), {}};
    out.values.reserve(n_);
    for (std::size_t j = 0; j < n_; ++j) out.values.push_back(f(t(j)));
    return out;
  }

 private:
  double theta_;  // reduced to (−π, π]
  std::size_t n_;
  double half_width_;
  Branch branch_ = Branch::Kernel;
  int quadrant_ = 0;
};

struct FrftResult {
  SampledWindow values;
  /// Soft warning: the input did not decay to 1e−6 of its peak at the edges.
  bool edge_mass_warning = false;
};

/// F_θ on the plan grid. Special angles: identity, Fourier transform
/// (ĝ(ξ) = ∫ g(x) e^{−2πixξ} dx), reflection, inverse transform. Otherwise
/// chirp · scaled transform · chirp with γ_θ = e^{i(θ/2 − (π/4)·sign(sin θ))}.
FrftResult frft(const SampledWindow& f, const FrftPlan& plan);

inline constexpr int kMaxHermiteOrder = 64;

/// L²-normalized Hermite function h_n (F h_n = (−i)^n h_n) on the plan grid.
SampledWindow hermite(int n, const FrftPlan& plan);

/// ‖F_θ h_n − e^{−inθ} h_n‖ / ‖h_n‖ on the plan grid.
double verify_eigen(double theta, int n, std::size_t grid_n = 2048, double half_width = 8.0);

/// Discrete L² norm squared of samples.
double sampled_norm_sq(const SampledWindow& f);

/// Fraction of ‖f‖² carried by samples with |t| > radius.
double mass_outside(const SampledWindow& f, double radius);

}  // namespace gaborlat
