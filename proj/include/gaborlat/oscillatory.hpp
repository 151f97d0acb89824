#pragma once

#include <complex>
#include <functional>

namespace gaborlat {

using Complex = std::complex<double>;

/// Faddeeva function w(z) = e^{−z²} erfc(−iz), valid in the whole plane.
/// Weideman's rational approximation (40 terms) in the closed upper half
/// plane; the lower half plane goes through w(z) = 2e^{−z²} − w(−z).
Complex faddeeva(Complex z);

/// erf of a complex argument; Taylor series for |z| < 1, Faddeeva otherwise.
Complex erf(Complex z);

/// ∫_a^b exp(i(A x² + B x)) dx.
///
/// A = 0 is the pure exponential; otherwise the square is completed and the
/// Fresnel integral is written through w(z) on the ray arg z = π/4. When the
/// completed-square phase B²/4A is too large to carry in double precision the
/// integral is done by composite Gauss–Legendre instead.
Complex quadratic_phase_integral(double A, double B, double a, double b);

/// Composite 16-point Gauss–Legendre on `panels` equal panels of [a, b].
Complex gauss_legendre(const std::function<Complex(double)>& f, double a, double b, int panels);

}  // namespace gaborlat
