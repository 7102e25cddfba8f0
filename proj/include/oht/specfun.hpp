#pragma once

#include "oht/complex.hpp"

namespace oht {

/// A special-function value with an internal accuracy estimate.
struct SpecFunResult {
  Complex value;
  double est_err = 0.0;
};

/// Gamma function for real x > 0.
[[nodiscard]] double gamma_real(double x);

/// Upper incomplete gamma Gamma(a, z), a > 0, z in the closed right half-plane
/// or on the imaginary axis. Gamma(a, 0) = Gamma(a).
[[nodiscard]] Complex upper_incomplete_gamma(double a, Complex z);
[[nodiscard]] SpecFunResult upper_incomplete_gamma_err(double a, Complex z);

/// Lower incomplete gamma gamma(a, z) = int_0^z t^{a-1} e^{-t} dt, a > 0.
[[nodiscard]] Complex lower_incomplete_gamma(double a, Complex z);
[[nodiscard]] SpecFunResult lower_incomplete_gamma_err(double a, Complex z);

/// Exponential integral E_1(z), z != 0, |arg z| < pi.
[[nodiscard]] Complex expint_e1(Complex z);
[[nodiscard]] SpecFunResult expint_e1_err(Complex z);

struct SiCi {
  double si;
  double ci;
};

/// Sine and cosine integrals for x > 0.
[[nodiscard]] SiCi sine_cosine_integrals(double x);

struct BesselJYK {
  double j;
  double y;
  double k;
};

/// J_nu, Y_nu and K_nu for nu in {0, 1}, x > 0.
[[nodiscard]] BesselJYK bessel_jyk(int nu, double x);

/// e^x K_nu(x), finite for all x > 0.
[[nodiscard]] double bessel_k_scaled(int nu, double x);

/// Struve function H_nu(x) for nu in {-1, 0, 1}, x > 0.
[[nodiscard]] double struve_h(int nu, double x);

}  // namespace oht
