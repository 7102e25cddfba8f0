#pragma once

#include <boost/math/constants/constants.hpp>
#include <cmath>
#include <type_traits>

#include "oht/complex.hpp"
#include "oht/gauss.hpp"
#include "oht/oscispec.hpp"
#include "oht/precision.hpp"

namespace oht {

struct EvalParams {
  int n = 16;                     // Laguerre order
  int N = 32;                     // Chebyshev degree
  double a = 0.0;                 // split point; 0 selects max(1, 2x)
  int N1 = 0;                     // moment truncation; 0 selects 2N
  double x_split = kDefaultXSplit;
};

/// e^{-i alpha pi/2} w^{alpha-1} sum_k w_k f_alpha(i t_k / w) / (t_k / w + i x),
/// the contour-rotated integral discretized by the (alpha, n) rule. Generic in
/// the working precision.
template <typename Real, typename FAlpha>
[[nodiscard]] complex_t<Real> rotated_laguerre_sum(const BasicRule<Real>& rule, const Real& omega,
                                                   const Real& x, FAlpha&& f_alpha) {
  using C = complex_t<Real>;
  using std::cos;
  using std::pow;
  using std::sin;
  const Real alpha = Real(rule.alpha);
  const Real pi = boost::math::constants::pi<Real>();
  C sum(Real(0), Real(0));
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
    const Real p = rule.nodes[k] / omega;
    const C v = f_alpha(C(Real(0), p)) / C(p, x);
    if constexpr (std::is_floating_point_v<Real>) {
      if (!is_finite(v)) throw EvalError("oscilland not finite on the imaginary axis", k);
    }
    sum += rule.weights[k] * v;
  }
  const Real phase = -alpha * pi / 2;
  return C(cos(phase), sin(phase)) * pow(omega, alpha - 1) * sum;
}

/// Away-from-origin rule: i pi f(x) e^{iwx} plus the rotated Laguerre sum.
/// err_estimate = |value_n - value_{n-2}|.
[[nodiscard]] HilbertResult eval_away(const OscillandSpec& spec, double omega, double x, int n,
                                      double x_split = kDefaultXSplit);

/// Near-origin method: I1 on [0, a] by the modified Clenshaw-Curtis rule with
/// Chebyshev moments, I2 on [a, inf) by Gauss-Laguerre along a + ip.
[[nodiscard]] HilbertResult eval_near(const OscillandSpec& spec, double omega, double x,
                                      const EvalParams& params = {});

/// The two pieces of eval_near, exposed for convergence studies.
[[nodiscard]] Complex near_i1(const OscillandSpec& spec, double omega, double x, double a, int N,
                              int N1 = 0);
[[nodiscard]] Complex near_i2(const OscillandSpec& spec, double omega, double x, double a, int n);

/// Principal value of int_{-1}^{1} (1+y)^{-alpha} e^{i w y} / (y - tau) dy.
[[nodiscard]] Complex finite_cpv_kernel(double alpha, double omega_tilde, double tau);

/// Finite-part integral at x = 0 by Wong's Gaussian quadrature.
[[nodiscard]] HilbertResult eval_origin(const OscillandSpec& spec, double omega, int n);

/// Regime dispatch via classify(x, x_split).
[[nodiscard]] HilbertResult eval_auto(const OscillandSpec& spec, double omega, double x,
                                      const EvalParams& params = {});

/// Split point used by eval_near when params.a is 0.
[[nodiscard]] inline double default_split_point(double x) { return x * 2.0 > 1.0 ? 2.0 * x : 1.0; }

}  // namespace oht
