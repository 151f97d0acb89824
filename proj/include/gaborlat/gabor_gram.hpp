#pragma once

#include <complex>
#include <string>
#include <vector>

#include "gaborlat/lattice.hpp"
#include "gaborlat/window.hpp"

namespace gaborlat {

/// Time-frequency shift π(t, s) g = e^{2πisx} g(x − t).
struct TimeFreqPoint {
  double t = 0.0;
  double s = 0.0;
};

/// {A(m, n) : |m|, |n| ≤ R}, m-major.
struct IndexSet {
  std::vector<TimeFreqPoint> points;

  static IndexSet from_basis(const FloatMatrix& basis, int radius);
};

enum class GramMethod { ClosedForm, Quadrature };

struct QuadratureOptions {
  /// Maximum |Δs|·step before GridTooCoarse.
  double nyquist_limit = 0.25;
  /// Two-grid (h, 3h) Richardson combination of the sampled sums.
  bool richardson = false;
};

/// ⟨π(p)g, π(q)g⟩ = ∫ conj(π(p)g) π(q)g.
///
/// Piecewise windows are integrated in closed form piece by piece. Sampled
/// windows use the cell rule on their own grid with the oscillation
/// e^{2πiΔs x} integrated exactly over each cell; a relative shift that is not
/// a whole number of steps is interpolated.
std::complex<double> inner_product(const Window& g, const TimeFreqPoint& p, const TimeFreqPoint& q,
                                   const QuadratureOptions& opts = {});

/// Hermitian Gram matrix, row-major n×n; only the upper triangle is computed.
struct GramMatrix {
  std::size_t size = 0;
  std::vector<std::complex<double>> entries;
  std::complex<double> operator()(std::size_t i, std::size_t j) const { return entries[i * size + j]; }
};

GramMatrix gram_matrix(const Window& g, const IndexSet& idx, const QuadratureOptions& opts = {});

struct GramReport {
  std::size_t size = 0;
  double max_offdiag = 0.0;
  double max_diag_dev = 0.0;
  TimeFreqPoint worst_pair[2];
  GramMethod method = GramMethod::ClosedForm;
  bool orthonormal_on_truncation = false;
  double window_norm_sq = 0.0;
  std::string completeness_note;
};

const char* to_string(GramMethod method);

/// Orthonormality of G(g, idx) on the truncation; completeness is not tested.
GramReport onb_certificate(const Window& g, const IndexSet& idx, double tol,
                           const QuadratureOptions& opts = {});
GramReport onb_certificate(const Window& g, const Lattice2D& lattice, int radius, double tol,
                           const QuadratureOptions& opts = {});

}  // namespace gaborlat
