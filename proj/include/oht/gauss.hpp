#pragma once

#include <array>
#include <boost/math/special_functions/gamma.hpp>
#include <cstddef>
#include <limits>
#include <vector>

#include "oht/complex.hpp"
#include "oht/error.hpp"

namespace oht {

/// Generalized Gauss-Laguerre rule for the weight t^{-alpha} e^{-t} on [0, inf).
template <typename Real>
struct BasicRule {
  double alpha = 0.0;
  int n = 0;
  std::vector<Real> nodes;    // increasing, > 0
  std::vector<Real> weights;  // > 0, summing to Gamma(1 - alpha)
};

using QuadratureRule = BasicRule<double>;
using QuadratureRuleL = BasicRule<long double>;

inline constexpr int kMaxRuleOrder = 64;

/// Golub-Welsch construction, 1 <= n <= 64. Rules are cached per (alpha, n);
/// the returned reference stays valid for the life of the process.
[[nodiscard]] const QuadratureRule& laguerre_rule(double alpha, int n);

/// Same rule carried in long double.
[[nodiscard]] const QuadratureRuleL& laguerre_rule_ext(double alpha, int n);

/// The (alpha, n) rule in an arbitrary real type: long-double Golub-Welsch
/// nodes polished by Newton steps on L_n^{(-alpha)}, weights from
/// w = Gamma(n+1-alpha) t / (n! (n+1)^2 L_{n+1}(t)^2).
template <typename Real>
[[nodiscard]] BasicRule<Real> laguerre_rule_refined(double alpha, int n) {
  using std::abs;
  const QuadratureRuleL& seed = laguerre_rule_ext(alpha, n);
  const Real b = -Real(alpha);
  const Real eps = std::numeric_limits<Real>::epsilon();

  // Returns (L_n(t), L_{n-1}(t), L_{n+1}(t)).
  auto eval = [&](const Real& t) {
    Real lm1 = 0;
    Real l = 1;
    for (int k = 0; k < n; ++k) {
      const Real next = ((2 * k + 1 + b - t) * l - (k + b) * lm1) / (k + 1);
      lm1 = l;
      l = next;
    }
    const Real lp1 = ((2 * n + 1 + b - t) * l - (n + b) * lm1) / (n + 1);
    return std::array<Real, 3>{l, lm1, lp1};
  };

  BasicRule<Real> r;
  r.alpha = alpha;
  r.n = n;
  Real fact = 1;
  for (int k = 2; k <= n; ++k) fact *= k;
  const Real g = boost::math::tgamma(Real(n) + 1 + b);
  for (int k = 0; k < n; ++k) {
    Real t = Real(seed.nodes[k]);
    for (int it = 0; it < 20; ++it) {
      const auto v = eval(t);
      const Real deriv = (n * v[0] - (n + b) * v[1]) / t;  // t L_n' = n L_n - (n+b) L_{n-1}
      const Real dt = v[0] / deriv;
      t -= dt;
      if (abs(dt) <= 4 * eps * t) break;
    }
    const Real lp1 = eval(t)[2];
    r.nodes.push_back(t);
    r.weights.push_back(g * t / (fact * (n + 1) * (n + 1) * lp1 * lp1));
  }
  return r;
}

/// sum_k w_k g(t_k) with compensated summation. Throws EvalError if g is
/// non-finite at a node.
template <typename Real, typename G>
[[nodiscard]] std::complex<Real> apply_rule(const BasicRule<Real>& rule, G&& g) {
  CompensatedSum<std::complex<Real>> sum;
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
    const std::complex<Real> v = g(rule.nodes[k]);
    if (!is_finite(v)) throw EvalError("apply_rule: integrand not finite", k);
    sum.add(rule.weights[k] * v);
  }
  return sum.value();
}

}  // namespace oht
