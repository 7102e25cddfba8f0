#include "oht/bessel.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <cmath>

#include "oht/error.hpp"
#include "oht/gauss.hpp"
#include "oht/specfun.hpp"

namespace oht {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr int kGradedLevels = 80;
constexpr int kTailOrder = 40;
constexpr int kTailOrderFine = 64;

void check_args(const OscillandSpec& spec, double omega, double x, BesselKind bk) {
  if (!(omega > 0.0) || !std::isfinite(omega)) throw DomainError("omega must be > 0");
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("bessel: x must be > 0");
  if (bk.nu != 0 && bk.nu != 1) throw ParamError("bessel: nu must be 0 or 1");
  if (bk.nu == 1) {
    // K_1(wy) ~ 1/(wy); the integral exists only when g_j vanishes at 0.
    const double a0 = spec.series().empty() ? std::abs(spec.f_alpha(Complex{})) : spec.series().front();
    const bool vanishes = a0 == 0.0 || (bk.kind == BesselType::J && spec.alpha() == 0.0);
    if (!vanishes) throw ParamError("bessel: K_1 integral diverges for this oscilland");
  }
}

}  // namespace

Complex bessel_k_integral(const OscillandSpec& spec, double omega, double x, BesselKind bk,
                          int refine) {
  check_args(spec, omega, x, bk);
  if (refine < 0) throw ParamError("bessel: refine must be >= 0");
  const int nu = bk.nu;
  const double sign = bk.kind == BesselType::J ? 1.0 : -1.0;
  const Complex rot = expi(-0.5 * kPi * nu);

  auto g_over = [&](double y) {
    const Complex g = Complex(x, y) * rot * spec.f(Complex(0.0, y)) +
                      sign * Complex(x, -y) * std::conj(rot) * spec.f(Complex(0.0, -y));
    return g / (y * y + x * x);
  };
  auto integrand = [&](double y) {
    const Complex v = bessel_jyk(nu, omega * y).k * g_over(y);
    if (!is_finite(v)) throw EvalError("bessel: integrand not finite");
    return v;
  };

  using Legendre = boost::math::quadrature::gauss<double, 10>;
  const double y0 = 1.0 / omega;
  const int pieces = 1 << refine;
  CompensatedSum<Complex> head;
  double hi = y0;
  for (int level = 0; level < kGradedLevels; ++level) {
    const double lo = 0.5 * hi;
    const double step = (hi - lo) / pieces;
    for (int p = 0; p < pieces; ++p) {
      head.add(Legendre::integrate(integrand, lo + p * step, lo + (p + 1) * step));
    }
    hi = lo;
  }

  // y = (1 + u)/w, K_nu(1 + u) = e^{-(1+u)} * scaled.
  const QuadratureRule& rule = laguerre_rule(0.0, refine == 0 ? kTailOrder : kTailOrderFine);
  const Complex tail = apply_rule(rule, [&](double u) {
    const double y = (1.0 + u) / omega;
    return bessel_k_scaled(nu, 1.0 + u) * std::exp(-1.0) * g_over(y);
  });
  return head.value() + tail / omega;
}

HilbertResult eval_bessel_hilbert(const OscillandSpec& spec, double omega, double x, BesselKind bk) {
  check_args(spec, omega, x, bk);
  const BesselJYK b = bessel_jyk(bk.nu, omega * x);
  const Complex fx = spec.f(Complex{x});
  if (!is_finite(fx)) throw EvalError("bessel: oscilland not finite at x");

  const Complex k0 = bessel_k_integral(spec, omega, x, bk, 0);
  const Complex k1 = bessel_k_integral(spec, omega, x, bk, 1);

  HilbertResult r;
  r.regime = Regime::Away;
  if (bk.kind == BesselType::J) {
    r.value = -kPi * fx * b.y - k1 / kPi;
    if (bk.nu == 1) {
      // Small quarter-circles at the origin, where K_1(-+iwt) ~ 1/(-+iwt), add -f(0)/(wx).
      const Complex f0 = spec.series().empty() ? spec.f(Complex{}) : Complex(spec.series().front());
      r.value -= f0 / (omega * x);
    }
  } else {
    r.value = kPi * fx * b.j + kI * k1 / kPi;
  }
  r.err_estimate = std::abs(k1 - k0) / kPi;
  return r;
}

double bessel_identity_one(int nu, double omega, double x) {
  if (nu != 0 && nu != 1) throw ParamError("bessel: nu must be 0 or 1");
  const double z = omega * x;
  if (nu == 0) return -0.5 * kPi * (struve_h(0, z) + bessel_jyk(0, z).y);
  return 0.5 * kPi * (struve_h(-1, z) - bessel_jyk(1, z).y);
}

double bessel_exact_one(int nu, double omega, double x) {
  const double id = bessel_identity_one(nu, omega, x);
  return nu == 1 ? id - 1.0 / (omega * x) : id;
}

}  // namespace oht
