#include "gaborlat/oscillatory.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

namespace gaborlat {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kWeidemanTerms = 40;
// Completed-square phases above this lose more than ~1e-11 absolute accuracy.
constexpr double kMaxCompletedPhase = 1e5;

struct WeidemanTable {
  double L = 0.0;
  std::array<double, kWeidemanTerms> coeffs{};  // coefficient of Z^n

  WeidemanTable() {
    const int N = kWeidemanTerms;
    const int M = 2 * N;
    const int M2 = 2 * M;
    L = std::sqrt(N / std::sqrt(2.0));
    // f on k = −M+1 .. M−1, with a leading zero, then fftshift; coefficients
    // are the real part of its DFT.
    std::vector<double> f(M2, 0.0);
    for (int k = -M + 1; k <= M - 1; ++k) {
      const double t = L * std::tan(0.5 * k * kPi / M);
      f[k + M] = std::exp(-t * t) * (L * L + t * t);
    }
    std::vector<double> shifted(M2);
    for (int i = 0; i < M2; ++i) shifted[i] = f[(i + M) % M2];
    for (int n = 1; n <= N; ++n) {
      double acc = 0.0;
      for (int j = 0; j < M2; ++j) acc += shifted[j] * std::cos(2.0 * kPi * n * j / M2);
      coeffs[n - 1] = acc / M2;
    }
  }
};

const WeidemanTable& weideman() {
  static const WeidemanTable table;
  return table;
}

Complex faddeeva_upper(Complex z) {
  const WeidemanTable& tab = weideman();
  const Complex iz(-z.imag(), z.real());
  const Complex denom = tab.L - iz;
  const Complex Z = (tab.L + iz) / denom;
  Complex p = 0.0;
  for (int n = kWeidemanTerms - 1; n >= 0; --n) p = p * Z + tab.coeffs[n];
  return 2.0 * p / (denom * denom) + (1.0 / std::sqrt(kPi)) / denom;
}

Complex erf_series(Complex z) {
  // erf z = 2/√π Σ (−1)^n z^{2n+1} / (n! (2n+1))
  const Complex z2 = z * z;
  Complex term = z;
  Complex sum = z;
  for (int n = 1; n < 60; ++n) {
    term *= -z2 / double(n);
    const Complex add = term / double(2 * n + 1);
    sum += add;
    if (std::abs(add) < 1e-17 * std::abs(sum)) break;
  }
  return 2.0 / std::sqrt(kPi) * sum;
}

const Complex kEighth = std::polar(1.0, kPi / 4);  // e^{iπ/4}

// ∫_v^∞ e^{it²} dt for v ≥ 0.
Complex fresnel_tail(double v) {
  return 0.5 * std::sqrt(kPi) * kEighth * std::polar(1.0, v * v) * faddeeva_upper(kEighth * v);
}

// ∫_0^v e^{it²} dt, any sign of v.
Complex fresnel_head(double v) {
  return 0.5 * std::sqrt(kPi) * kEighth * erf(std::conj(kEighth) * v);
}

// ∫_{v1}^{v2} e^{it²} dt arranged so large arguments never cancel.
Complex unit_fresnel(double v1, double v2) {
  if (v1 >= 0.0) return fresnel_tail(v1) - fresnel_tail(v2);
  if (v2 <= 0.0) return fresnel_tail(-v2) - fresnel_tail(-v1);
  return fresnel_head(v2) - fresnel_head(v1);
}

struct GaussLegendre16 {
  std::array<double, 16> x{}, w{};
  GaussLegendre16() {
    constexpr int n = 16;
    for (int i = 0; i < n; ++i) {
      double r = std::cos(kPi * (i + 0.75) / (n + 0.5));
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = r;
        for (int k = 2; k <= n; ++k) {
          const double p2 = ((2 * k - 1) * r * p1 - (k - 1) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        const double dp = n * (r * p1 - p0) / (r * r - 1.0);
        const double dr = p1 / dp;
        r -= dr;
        if (std::fabs(dr) < 1e-16) {
          x[i] = r;
          w[i] = 2.0 / ((1.0 - r * r) * dp * dp);
          break;
        }
      }
    }
  }
};

const GaussLegendre16& gl16() {
  static const GaussLegendre16 rule;
  return rule;
}

}  // namespace

Complex faddeeva(Complex z) {
  if (z.imag() >= 0.0) return faddeeva_upper(z);
  return 2.0 * std::exp(-z * z) - faddeeva_upper(-z);
}

Complex erf(Complex z) {
  if (std::abs(z) < 1.0) return erf_series(z);
  // erf z = 1 − e^{−z²} w(iz) when Re z ≥ 0; odd symmetry otherwise.
  if (z.real() < 0.0) return -erf(-z);
  const Complex iz(-z.imag(), z.real());
  return 1.0 - std::exp(-z * z) * faddeeva(iz);
}

Complex gauss_legendre(const std::function<Complex(double)>& f, double a, double b, int panels) {
  const GaussLegendre16& rule = gl16();
  const double width = (b - a) / panels;
  Complex total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * width;
    Complex acc = 0.0;
    for (int i = 0; i < 16; ++i) acc += rule.w[i] * f(mid + 0.5 * width * rule.x[i]);
    total += 0.5 * width * acc;
  }
  return total;
}

Complex quadratic_phase_integral(double A, double B, double a, double b) {
  if (b < a) return -quadratic_phase_integral(A, B, b, a);
  if (b == a) return 0.0;
  const double len = b - a;
  if (A == 0.0) {
    const double half = 0.5 * B * len;
    const double sinc = std::fabs(half) < 1e-8 ? 1.0 - half * half / 6.0 : std::sin(half) / half;
    return std::polar(len * sinc, 0.5 * B * (a + b));
  }
  const double completed = B * B / (4.0 * std::fabs(A));
  if (completed > kMaxCompletedPhase) {
    const double span = std::max(std::fabs(a), std::fabs(b));
    const double cycles = (2.0 * std::fabs(A) * span + std::fabs(B)) * len / (2.0 * kPi);
    const int panels = static_cast<int>(std::min(1e6, std::ceil(2.0 * cycles) + 2.0));
    return gauss_legendre([A, B](double x) { return std::polar(1.0, (A * x + B) * x); }, a, b, panels);
  }
  // A x² + B x = A (x + c)² − B²/(4A), c = B/(2A); then v = √|A| (x + c).
  const double c = B / (2.0 * A);
  const double root = std::sqrt(std::fabs(A));
  Complex core = unit_fresnel(root * (a + c), root * (b + c)) / root;
  if (A < 0.0) core = std::conj(core);
  return std::polar(1.0, -B * B / (4.0 * A)) * core;
}

}  // namespace gaborlat
