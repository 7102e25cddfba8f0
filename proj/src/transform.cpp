#include "oht/transform.hpp"

#include <algorithm>
#include <cmath>

#include "oht/chebfit.hpp"
#include "oht/error.hpp"
#include "oht/moments.hpp"
#include "oht/specfun.hpp"

namespace oht {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr int kKernelTailOrder = 32;

void check_omega(double omega) {
  if (!(omega > 0.0) || !std::isfinite(omega)) throw DomainError("omega must be > 0");
}

void check_finite(Complex v, const char* what) {
  if (!is_finite(v)) throw EvalError(what);
}

Complex away_value(const OscillandSpec& spec, double omega, double x, int n) {
  const QuadratureRule& rule = laguerre_rule(spec.alpha(), n);
  const Complex pole = kI * kPi * spec.f(Complex{x}) * expi(omega * x);
  check_finite(pole, "oscilland not finite at x");
  return pole + rotated_laguerre_sum(rule, omega, x, [&](Complex z) { return spec.f_alpha(z); });
}

Complex origin_value(const OscillandSpec& spec, double omega, int n) {
  const double alpha = spec.alpha();
  const double a0 = spec.series().front();
  if (alpha > 0.0) {
    const QuadratureRule& rule = laguerre_rule(alpha, n);
    const Complex lead = expi(0.5 * kPi * (2.0 - alpha)) * std::pow(omega, alpha) / alpha *
                         gamma_real(1.0 - alpha) * a0;
    const Complex sum = apply_rule(rule, [&](double t) {
      const Complex z(0.0, t / omega);
      return (spec.f_alpha(z) - a0) / z;
    });
    return lead + expi(0.5 * kPi * (1.0 - alpha)) * std::pow(omega, alpha - 1.0) * sum;
  }
  const QuadratureRule& rule = laguerre_rule(0.0, n);
  const Complex f0 = spec.f(Complex{});
  const Complex lead = Complex(-kEulerGamma - std::log(omega), 0.5 * kPi) * f0;
  const Complex sum =
      apply_rule(rule, [&](double t) { return (spec.f(Complex(0.0, t / omega)) - f0) / t; });
  return lead + sum;
}

}  // namespace

HilbertResult eval_away(const OscillandSpec& spec, double omega, double x, int n, double x_split) {
  check_omega(omega);
  if (!(x > 0.0)) throw DomainError("eval_away: x must be > 0");
  if (n < 1 || n > kMaxRuleOrder) throw ParamError("eval_away: n must lie in [1, 64]");

  HilbertResult r;
  r.regime = Regime::Away;
  r.params.n = n;
  r.params.x_split = x_split;
  r.value = away_value(spec, omega, x, n);
  if (n > 2) {
    r.err_estimate = std::abs(r.value - away_value(spec, omega, x, n - 2));
  } else if (n == 2) {
    r.err_estimate = std::abs(r.value - away_value(spec, omega, x, 1));
  }
  if (x < x_split) r.notes.emplace_back("x below x_split: away rule used off its regime");
  return r;
}

Complex finite_cpv_kernel(double alpha, double w, double tau) {
  if (alpha == 0.0) {
    const SiCi s1 = sine_cosine_integrals(w * (1.0 - tau));
    const SiCi s2 = sine_cosine_integrals(w * (1.0 + tau));
    return expi(w * tau) * Complex(s1.ci - s2.ci, s1.si + s2.si);
  }
  const Complex head = expi(w * tau) * std::pow(1.0 + tau, -alpha) *
                       (kI * kPi + expi(-alpha * kPi) * gamma_real(1.0 - alpha) *
                                       upper_incomplete_gamma(alpha, Complex(0.0, w * (1.0 + tau))));
  const QuadratureRule& rule = laguerre_rule(0.0, kKernelTailOrder);
  const Complex tail = apply_rule(rule, [&](double t) {
    const Complex s(0.0, t / w);
    return 1.0 / (std::pow(2.0 + s, alpha) * (1.0 - tau + s));
  });
  return head - kI * expi(w) / w * tail;
}

Complex near_i1(const OscillandSpec& spec, double omega, double x, double a, int N, int N1) {
  const double alpha = spec.alpha();
  const double w = 0.5 * omega * a;
  const double tau = 2.0 * x / a - 1.0;

  const ChebInterpolant p =
      fit([&](double y) { return spec.f_alpha(Complex(0.5 * a * (y + 1.0))); }, N);
  const auto& c = p.coeffs();
  const MomentTable Z = alpha == 0.0 ? moments_z_via_m(w, N, N1) : moments_z(alpha, w, N, N1);

  // sum'_{k<N} b_k Z_k by the Clenshaw-style accumulation.
  Complex s_prev2 = 0.0;
  Complex s_prev = 0.5 * Z.values[0];
  Complex W = 0.0;
  for (int k = 1; k < N; ++k) {
    W += 2.0 * c[k] * s_prev;
    const Complex s = Z.values[k] + 2.0 * tau * s_prev - s_prev2;
    s_prev2 = s_prev;
    s_prev = s;
  }
  const Complex smooth = W + s_prev * c[N];
  const Complex ptau = eval_barycentric(p, tau);
  const Complex v = std::pow(0.5 * a, -alpha) * expi(w) * (smooth + ptau * finite_cpv_kernel(alpha, w, tau));
  check_finite(v, "near_i1: non-finite result");
  return v;
}

Complex near_i2(const OscillandSpec& spec, double omega, double x, double a, int n) {
  const QuadratureRule& rule = laguerre_rule(0.0, n);
  const Complex sum = apply_rule(rule, [&](double t) {
    const double p = t / omega;
    return spec.f(Complex(a, p)) / Complex(a - x, p);
  });
  return kI * expi(omega * a) / omega * sum;
}

HilbertResult eval_near(const OscillandSpec& spec, double omega, double x, const EvalParams& params) {
  check_omega(omega);
  if (!(x > 0.0)) throw DomainError("eval_near: x must be > 0");
  const double a = params.a == 0.0 ? default_split_point(x) : params.a;
  if (!(a > x)) throw ParamError("eval_near: split point a must exceed x");
  if (params.N < 2) throw ParamError("eval_near: N must be >= 2");
  if (params.n < 1 || params.n > kMaxRuleOrder) throw ParamError("eval_near: n must lie in [1, 64]");
  const int N1 = params.N1 == 0 ? 2 * params.N : params.N1;
  if (N1 < params.N) throw ParamError("eval_near: N1 must be >= N");

  HilbertResult r;
  r.regime = Regime::Near;
  r.params = {params.n, params.N, a, params.x_split, N1};

  const Complex i1 = near_i1(spec, omega, x, a, params.N, N1);
  const Complex i2 = near_i2(spec, omega, x, a, params.n);
  r.value = i1 + i2;

  if (params.N >= 4) {
    const int half = params.N / 2;
    r.err_estimate += std::abs(i1 - near_i1(spec, omega, x, a, half, 2 * half));
  } else {
    r.notes.emplace_back("N < 4: no Chebyshev halving estimate");
  }
  if (params.n > 2) r.err_estimate += std::abs(i2 - near_i2(spec, omega, x, a, params.n - 2));
  if (x >= params.x_split) r.notes.emplace_back("x at or above x_split: near method used off its regime");
  return r;
}

HilbertResult eval_origin(const OscillandSpec& spec, double omega, int n) {
  check_omega(omega);
  if (spec.series().empty()) throw ParamError("eval_origin: spec has no series coefficients");
  if (n < 1 || n > kMaxRuleOrder) throw ParamError("eval_origin: n must lie in [1, 64]");
  HilbertResult r;
  r.regime = Regime::Origin;
  r.params.n = n;
  r.value = origin_value(spec, omega, n);
  if (n > 2) r.err_estimate = std::abs(r.value - origin_value(spec, omega, n - 2));
  return r;
}

HilbertResult eval_auto(const OscillandSpec& spec, double omega, double x, const EvalParams& params) {
  switch (classify(x, params.x_split)) {
    case Regime::Origin: {
      HilbertResult r = eval_origin(spec, omega, params.n);
      r.params.x_split = params.x_split;
      return r;
    }
    case Regime::Near:
      return eval_near(spec, omega, x, params);
    case Regime::Away:
      break;
  }
  return eval_away(spec, omega, x, params.n, params.x_split);
}

}  // namespace oht
