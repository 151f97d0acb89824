#include "gaborlat/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <numbers>

namespace gaborlat {

namespace {

// Planner calls are not thread-safe; execution is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

class Plan {
 public:
  Plan(std::vector<std::complex<double>>& data, bool inverse) {
    std::lock_guard lock(planner_mutex());
    auto* p = reinterpret_cast<fftw_complex*>(data.data());
    plan_ = fftw_plan_dft_1d(static_cast<int>(data.size()), p, p, inverse ? FFTW_BACKWARD : FFTW_FORWARD,
                             FFTW_ESTIMATE);
  }
  ~Plan() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan_);
  }
  Plan(const Plan&) = delete;
  Plan& operator=(const Plan&) = delete;
  void execute() { fftw_execute(plan_); }

 private:
  fftw_plan plan_;
};

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

// e^{−iπ·beta·j²} with the exponent reduced modulo 2 before scaling by π.
std::complex<double> half_chirp(double beta, double j) {
  const double e = std::fmod(beta * j * j, 2.0);
  return std::polar(1.0, -std::numbers::pi * e);
}

}  // namespace

void fft_inplace(std::vector<std::complex<double>>& data, bool inverse) {
  if (data.empty()) return;
  Plan plan(data, inverse);
  plan.execute();
}

std::vector<std::complex<double>> chirp_z(const std::vector<std::complex<double>>& x, double beta,
                                          std::size_t m) {
  // jk = (j² + k² − (k − j)²)/2.
  const std::size_t n = x.size();
  const std::size_t len = next_pow2(n + m - 1);
  std::vector<std::complex<double>> a(len, 0.0), b(len, 0.0);
  for (std::size_t j = 0; j < n; ++j) a[j] = x[j] * half_chirp(beta, double(j));
  for (std::size_t k = 0; k < m; ++k) b[k] = std::conj(half_chirp(beta, double(k)));
  for (std::size_t j = 1; j < n; ++j) b[len - j] = std::conj(half_chirp(beta, double(j)));
  fft_inplace(a);
  fft_inplace(b);
  for (std::size_t i = 0; i < len; ++i) a[i] *= b[i];
  fft_inplace(a, true);
  std::vector<std::complex<double>> out(m);
  const double scale = 1.0 / double(len);
  for (std::size_t k = 0; k < m; ++k) out[k] = a[k] * scale * half_chirp(beta, double(k));
  return out;
}

}  // namespace gaborlat
