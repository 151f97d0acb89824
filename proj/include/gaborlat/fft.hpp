#pragma once

#include <complex>
#include <vector>

namespace gaborlat {

/// In-place unnormalized DFT, X_k = Σ_j x_j e^{∓2πijk/n} (forward uses −).
/// Plans are created per call with FFTW_ESTIMATE; safe for concurrent use.
void fft_inplace(std::vector<std::complex<double>>& data, bool inverse = false);

/// Chirp-z: X_k = Σ_{j<n} x_j e^{−2πi·beta·jk} for k < m (Bluestein).
std::vector<std::complex<double>> chirp_z(const std::vector<std::complex<double>>& x, double beta,
                                          std::size_t m);

}  // namespace gaborlat
