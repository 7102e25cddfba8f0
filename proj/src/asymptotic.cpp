#include "oht/asymptotic.hpp"

#include <cmath>

#include "oht/error.hpp"
#include "oht/specfun.hpp"

namespace oht {

namespace {

void check_omega(double omega) {
  if (!(omega > 0.0) || !std::isfinite(omega)) throw DomainError("omega must be > 0");
}

void check_terms(const OscillandSpec& spec, int m) {
  if (m < 0) throw ParamError("expansion: m must be >= 0");
  if (static_cast<int>(spec.series().size()) < m + 1) {
    throw ParamError("expansion: spec '" + spec.label() + "' has fewer than m+1 series coefficients");
  }
}

}  // namespace

ExpansionResult expand_positive_x(const OscillandSpec& spec, double omega, double x, int m) {
  check_omega(omega);
  if (!(x > 0.0)) throw DomainError("expand_positive_x: x must be > 0");
  check_terms(spec, m);
  const auto& a = spec.series();
  const double alpha = spec.alpha();

  CompensatedSum<Complex> sum;
  sum.add(Complex(0.0, kPi) * expi(omega * x) * spec.f(Complex{x}));
  ExpansionResult r;
  for (int l = 0; l <= m; ++l) {
    double c = 0.0;
    double xp = 1.0 / x;
    for (int k = 0; k <= l; ++k) {  // j = l - k
      c += a[l - k] * xp;
      xp /= x;
    }
    const double p = l + 1.0 - alpha;
    const Complex term = gamma_real(p) * std::pow(omega, -p) * expi(0.5 * kPi * p) * c;
    sum.add(-term);
    r.last_term_mag = std::abs(term);
  }
  r.value = sum.value();
  r.terms_used = m;
  return r;
}

ExpansionResult expand_origin(const OscillandSpec& spec, double omega, int m) {
  check_omega(omega);
  check_terms(spec, m);
  const auto& a = spec.series();
  const double alpha = spec.alpha();

  CompensatedSum<Complex> sum;
  Complex lead;
  if (alpha > 0.0) {
    lead = expi(0.5 * kPi * (2.0 - alpha)) * std::pow(omega, alpha) / alpha * gamma_real(1.0 - alpha) *
           a[0];
  } else {
    lead = Complex(-kEulerGamma - std::log(omega), 0.5 * kPi) * a[0];
  }
  sum.add(lead);
  ExpansionResult r;
  r.last_term_mag = std::abs(lead);
  for (int l = 1; l <= m; ++l) {
    const double p = l - alpha;
    const Complex term = a[l] * expi(0.5 * kPi * p) * gamma_real(p) * std::pow(omega, -p);
    sum.add(term);
    r.last_term_mag = std::abs(term);
  }
  r.value = sum.value();
  r.terms_used = m;
  return r;
}

Complex cpv_power_kernel(double alpha, double omega, double x) {
  check_omega(omega);
  if (!(x > 0.0)) throw DomainError("cpv_power_kernel: x must be > 0");
  if (!(alpha >= 0.0 && alpha < 1.0)) throw DomainError("cpv_power_kernel: alpha must lie in [0,1)");
  const Complex z(0.0, omega * x);
  const Complex ipi(0.0, kPi);
  if (alpha == 0.0) return expi(omega * x) * (expint_e1(z) + ipi);
  return expi(omega * x) * std::pow(x, -alpha) *
         (expi(-alpha * kPi) * gamma_real(1.0 - alpha) * upper_incomplete_gamma(alpha, z) + ipi);
}

}  // namespace oht
