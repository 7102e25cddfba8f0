#include "oht/specfun.hpp"

#include <gsl/gsl_sf_expint.h>

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <limits>

#include "oht/error.hpp"

namespace oht {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxIter = 100000;

// gamma(a, z) = z^a e^{-z} sum_k z^k / (a (a+1) ... (a+k)).
SpecFunResult lower_gamma_series(double a, Complex z) {
  CompensatedSum<Complex> sum;
  Complex term = 1.0 / a;
  double mag = 0.0;
  int k = 0;
  for (; k < kMaxIter; ++k) {
    sum.add(term);
    mag = std::max(mag, std::abs(term));
    if (std::abs(term) < 0.25 * kEps * std::abs(sum.value())) break;
    term *= z / (a + k + 1);
  }
  const Complex pre = std::exp(a * std::log(z)) * std::exp(-z);
  const Complex v = pre * sum.value();
  return {v, std::abs(pre) * (mag * kEps * 4.0 + std::abs(term))};
}

// Gamma(a, z) = e^{-z} z^a / (z + 1 - a - 1(1-a)/(z + 3 - a - 2(2-a)/(z + 5 - a - ...))).
// Modified Lentz evaluation. With a = 0 this is E_1(z).
SpecFunResult upper_gamma_cf(double a, Complex z) {
  const double tiny = 1e-300;
  Complex b = z + 1.0 - a;
  Complex c = 1.0 / tiny;
  Complex d = 1.0 / b;
  Complex h = d;
  Complex del = 1.0;
  for (int i = 1; i < kMaxIter; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < kEps) break;
  }
  // Separate factors: folding both phases into one exp loses digits at large |z|.
  const Complex pre = a == 0.0 ? std::exp(-z) : std::exp(a * std::log(z)) * std::exp(-z);
  const Complex v = pre * h;
  return {v, std::abs(v) * (std::abs(del - 1.0) + 8.0 * kEps)};
}

bool use_series(double a, Complex z) { return std::abs(z) <= 1.0 + a; }

void check_a(double a, const char* who) {
  if (!(a > 0.0) || !std::isfinite(a)) throw DomainError(std::string(who) + ": a must be > 0");
}

void check_half_plane(Complex z, const char* who) {
  if (!is_finite(z)) throw DomainError(std::string(who) + ": non-finite argument");
  if (z.real() < 0.0 && z.imag() == 0.0) {
    throw DomainError(std::string(who) + ": argument on the branch cut");
  }
}

}  // namespace

double gamma_real(double x) {
  if (!(x > 0.0)) throw DomainError("gamma_real: x must be > 0");
  return boost::math::tgamma(x);
}

SpecFunResult upper_incomplete_gamma_err(double a, Complex z) {
  check_a(a, "upper_incomplete_gamma");
  if (z == Complex{}) return {gamma_real(a), 0.0};
  check_half_plane(z, "upper_incomplete_gamma");
  if (use_series(a, z)) {
    const auto lo = lower_gamma_series(a, z);
    const double g = gamma_real(a);
    return {g - lo.value, lo.est_err + kEps * g};
  }
  return upper_gamma_cf(a, z);
}

Complex upper_incomplete_gamma(double a, Complex z) {
  return upper_incomplete_gamma_err(a, z).value;
}

SpecFunResult lower_incomplete_gamma_err(double a, Complex z) {
  check_a(a, "lower_incomplete_gamma");
  if (z == Complex{}) return {Complex{}, 0.0};
  check_half_plane(z, "lower_incomplete_gamma");
  if (use_series(a, z)) return lower_gamma_series(a, z);
  const auto up = upper_gamma_cf(a, z);
  const double g = gamma_real(a);
  return {g - up.value, up.est_err + kEps * g};
}

Complex lower_incomplete_gamma(double a, Complex z) {
  return lower_incomplete_gamma_err(a, z).value;
}

SpecFunResult expint_e1_err(Complex z) {
  if (z == Complex{}) throw DomainError("expint_e1: z = 0");
  check_half_plane(z, "expint_e1");
  if (std::abs(z) > 1.0) return upper_gamma_cf(0.0, z);

  // E_1(z) = -gamma - log z - sum_{k>=1} (-z)^k / (k k!).
  CompensatedSum<Complex> sum;
  sum.add(-kEulerGamma);
  sum.add(-std::log(z));
  Complex p = 1.0;
  double mag = 0.0;
  for (int k = 1; k < 200; ++k) {
    p *= -z / static_cast<double>(k);
    const Complex t = -p / static_cast<double>(k);
    sum.add(t);
    mag = std::max(mag, std::abs(t));
    if (std::abs(t) < 0.25 * kEps * std::abs(sum.value())) break;
  }
  const Complex v = sum.value();
  return {v, 4.0 * kEps * (std::abs(v) + mag + std::abs(std::log(z)))};
}

Complex expint_e1(Complex z) { return expint_e1_err(z).value; }

SiCi sine_cosine_integrals(double x) {
  if (!(x > 0.0)) throw DomainError("sine_cosine_integrals: x must be > 0");
  return {gsl_sf_Si(x), gsl_sf_Ci(x)};
}

BesselJYK bessel_jyk(int nu, double x) {
  if (nu != 0 && nu != 1) throw ParamError("bessel_jyk: nu must be 0 or 1");
  if (!(x > 0.0)) throw DomainError("bessel_jyk: x must be > 0");
  BesselJYK r;
  r.j = boost::math::cyl_bessel_j(nu, x);
  r.y = boost::math::cyl_neumann(nu, x);
  r.k = x > 700.0 ? 0.0 : boost::math::cyl_bessel_k(nu, x);
  return r;
}

double bessel_k_scaled(int nu, double x) {
  if (nu != 0 && nu != 1) throw ParamError("bessel_k_scaled: nu must be 0 or 1");
  if (!(x > 0.0)) throw DomainError("bessel_k_scaled: x must be > 0");
  if (x <= 600.0) return std::exp(x) * boost::math::cyl_bessel_k(nu, x);
  // Hankel expansion; at x > 600 ten terms are far below rounding.
  const double mu = 4.0 * nu * nu;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k <= 10; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= (mu - odd * odd) / (k * 8.0 * x);
    sum += term;
  }
  return std::sqrt(kPi / (2.0 * x)) * sum;
}

double struve_h(int nu, double x) {
  if (nu < -1 || nu > 1) throw ParamError("struve_h: nu must be -1, 0 or 1");
  if (!(x > 0.0)) throw DomainError("struve_h: x must be > 0");
  if (nu == -1) return 2.0 / kPi - struve_h(1, x);

  if (x <= 8.0) {
    // sum_k (-1)^k (x/2)^{2k+nu+1} / (Gamma(k+3/2) Gamma(k+nu+3/2))
    const long double h = x / 2.0L;
    const long double h2 = h * h;
    const long double sqrt_pi = std::sqrt(std::numbers::pi_v<long double>);
    long double term = nu == 0 ? h / (sqrt_pi / 2 * sqrt_pi / 2) : h2 / (sqrt_pi / 2 * 3 * sqrt_pi / 4);
    long double sum = 0.0L;
    for (int k = 0; k < 200; ++k) {
      sum += term;
      if (std::fabs(term) < 1e-21L * std::fabs(sum)) break;
      term *= -h2 / ((k + 1.5L) * (k + nu + 1.5L));
    }
    return static_cast<double>(sum);
  }

  // H_nu(x) - Y_nu(x) = 2 (x/2)^nu / (sqrt(pi) Gamma(nu + 1/2)) int_0^inf e^{-x t} (1+t^2)^{nu-1/2} dt
  auto integrand = [nu, x](double u) {
    const double t = u / x;
    const double s = std::sqrt(1.0 + t * t);
    return std::exp(-u) * (nu == 0 ? 1.0 / s : s);
  };
  const double inf = std::numeric_limits<double>::infinity();
  const double integral =
      boost::math::quadrature::gauss_kronrod<double, 31>::integrate(integrand, 0.0, inf, 15, 1e-15) /
      x;
  const double pref = nu == 0 ? 2.0 / kPi : x * 2.0 / kPi;
  return boost::math::cyl_neumann(nu, x) + pref * integral;
}

}  // namespace oht
