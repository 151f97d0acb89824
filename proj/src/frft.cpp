#include "gaborlat/frft.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gaborlat/error.hpp"
#include "gaborlat/fft.hpp"

namespace gaborlat {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSpecialWindow = 1e-12;
constexpr double kIllConditioned = 1e-3;

double reduce_angle(double theta) {
  double r = std::remainder(theta, 2.0 * kPi);  // [−π, π]
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

// Kernel evaluation with explicit sin/cot so the quarter turns can pass exact values.
SampledWindow kernel_transform(const SampledWindow& f, const FrftPlan& plan, double sin_t, double cot_t,
                               std::complex<double> gamma) {
  const std::size_t n = plan.size();
  const double h = plan.step();
  const double c = plan.t(0);
  std::vector<std::complex<double>> x(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double y = plan.t(j);
    const double phase = kPi * y * y * cot_t - 2.0 * kPi * c * h * double(j) / sin_t;
    x[j] = h * f.values[j] * std::polar(1.0, phase);
  }
  const std::vector<std::complex<double>> X = chirp_z(x, h * h / sin_t, n);
  const std::complex<double> lead = gamma / std::sqrt(std::fabs(sin_t)) *
                                    std::polar(1.0, -2.0 * kPi * c * c / sin_t);
  SampledWindow out{plan.t(0), h, std::vector<std::complex<double>>(n)};
  for (std::size_t k = 0; k < n; ++k) {
    const double xi = plan.t(k);
    const double phase = kPi * xi * xi * cot_t - 2.0 * kPi * c * h * double(k) / sin_t;
    out.values[k] = lead * std::polar(1.0, phase) * X[k];
  }
  return out;
}

}  // namespace

FrftPlan::FrftPlan(double theta, std::size_t n, double half_width)
    : theta_(reduce_angle(theta)), n_(n), half_width_(half_width) {
  if (n < 64 || (n & (n - 1)) != 0) throw Error(ErrorCode::InvalidArgument, "grid size must be a power of two >= 64");
  if (!(half_width >= 4.0)) throw Error(ErrorCode::InvalidArgument, "grid half-width must be >= 4");
  if (!std::isfinite(theta)) throw Error(ErrorCode::InvalidArgument, "angle must be finite");
  const double quarter = kPi / 2;
  const double k = std::round(theta_ / quarter);
  const double offset = std::fabs(theta_ - k * quarter);
  if (offset <= kSpecialWindow) {
    branch_ = Branch::Special;
    quadrant_ = static_cast<int>(((static_cast<long>(k) % 4) + 4) % 4);
  } else if (offset < kIllConditioned) {
    throw Error(ErrorCode::AngleIllConditioned,
                "angle within 1e-3 of a multiple of pi/2; compose with a quarter turn instead");
  }
}

FrftResult frft(const SampledWindow& f, const FrftPlan& plan) {
  const double h = plan.step();
  if (f.values.size() != plan.size() || std::fabs(f.step - h) > 1e-12 * h ||
      std::fabs(f.t_min - plan.t(0)) > 1e-9 * h) {
    throw Error(ErrorCode::GridMismatch, "input is not sampled on the plan grid");
  }
  FrftResult result;
  double peak = 0.0;
  for (const auto& v : f.values) peak = std::max(peak, std::abs(v));
  const double edge = std::max(std::abs(f.values.front()), std::abs(f.values.back()));
  result.edge_mass_warning = peak > 0.0 && edge > 1e-6 * peak;

  const double theta = plan.theta();
  if (plan.branch() == FrftPlan::Branch::Special) {
    switch (plan.quadrant()) {
      case 0:
        result.values = f;
        break;
      case 2:
        result.values = f;
        std::reverse(result.values.values.begin(), result.values.values.end());
        break;
      case 1:
        result.values = kernel_transform(f, plan, 1.0, 0.0, 1.0);
        break;
      default:
        result.values = kernel_transform(f, plan, -1.0, 0.0, 1.0);
        break;
    }
    return result;
  }
  const auto kernel = [&plan](const SampledWindow& in, double angle) {
    const double s = std::sin(angle);
    const double gamma_phase = angle / 2.0 - (kPi / 4.0) * (s > 0 ? 1.0 : -1.0);
    return kernel_transform(in, plan, s, std::cos(angle) / s, std::polar(1.0, gamma_phase));
  };
  if (std::fabs(std::cos(theta)) <= std::fabs(std::sin(theta)) * (1.0 + 1e-12)) {
    result.values = kernel(f, theta);
  } else {
    // Chirp rate above 1: F_θ = F_{θ−π/2} F_{π/2}.
    result.values = kernel(kernel_transform(f, plan, 1.0, 0.0, 1.0), reduce_angle(theta - kPi / 2));
  }
  return result;
}

SampledWindow hermite(int n, const FrftPlan& plan) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "Hermite order must be >= 0");
  if (n > kMaxHermiteOrder) throw Error(ErrorCode::OrderTooLarge, "Hermite order above 64");
  const double root = std::sqrt(2.0 * kPi);
  return plan.sample([n, root](double t) -> std::complex<double> {
    // ψ_{k+1} = √(2/(k+1)) x ψ_k − √(k/(k+1)) ψ_{k−1}, x = √(2π) t.
    const double x = root * t;
    double prev = 0.0;
    double cur = std::pow(2.0, 0.25) * std::exp(-kPi * t * t);
    for (int k = 0; k < n; ++k) {
      const double next = std::sqrt(2.0 / (k + 1)) * x * cur - std::sqrt(double(k) / (k + 1)) * prev;
      prev = cur;
      cur = next;
    }
    return cur;
  });
}

double sampled_norm_sq(const SampledWindow& f) {
  double total = 0.0;
  for (const auto& v : f.values) total += std::norm(v);
  return total * f.step;
}

double verify_eigen(double theta, int n, std::size_t grid_n, double half_width) {
  const FrftPlan plan(theta, grid_n, half_width);
  const SampledWindow h = hermite(n, plan);
  const SampledWindow out = frft(h, plan).values;
  const std::complex<double> eigen = std::polar(1.0, -double(n) * theta);
  double diff = 0.0;
  for (std::size_t j = 0; j < h.values.size(); ++j) diff += std::norm(out.values[j] - eigen * h.values[j]);
  return std::sqrt(diff * h.step / sampled_norm_sq(h));
}

double mass_outside(const SampledWindow& f, double radius) {
  double outside = 0.0, total = 0.0;
  for (std::size_t j = 0; j < f.values.size(); ++j) {
    const double m = std::norm(f.values[j]);
    total += m;
    if (std::fabs(f.t(j)) > radius) outside += m;
  }
  return total > 0.0 ? outside / total : 0.0;
}

}  // namespace gaborlat
