#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

#include "oht/asymptotic.hpp"
#include "oht/error.hpp"
#include "oht/oracle.hpp"
#include "oht/transform.hpp"
#include "support.hpp"

using namespace oht;
using oht::testing::loglog_slope;

namespace {

Complex exact_one(double w, double x) { return closed_form_exp(0.0, w, x).value; }

Complex reference(const OscillandSpec& s, double w, double x) {
  if (s.label() == "one") return exact_one(w, x);
  if (s.label() == "exp:1") return closed_form_exp(1.0, w, x).value;
  return oracle_rotated(s, w, x).value;
}

// PV int_{-1}^{1} h(y)/(y - tau) dy with h = (1+y)^{-alpha} e^{iwy}. Near tau
// the two sides are paired as (h(tau+u) - h(tau-u))/u.
Complex kernel_quad(double alpha, double w, double tau) {
  auto h = [&](double y) { return std::pow(1.0 + y, -alpha) * Complex(std::cos(w * y), std::sin(w * y)); };
  const double d = 0.5 * std::min(1.0 + tau, 1.0 - tau);
  auto pair = [&](double u) { return (h(tau + u) - h(tau - u)) / u; };
  auto right = [&](double y) { return h(y) / (y - tau); };
  // 1 + y = v^q with q = 1/(1 - alpha) turns (1+y)^{-alpha} dy into q dv.
  const double q = 1.0 / (1.0 - alpha);
  auto left = [&](double v) {
    const double y = std::pow(v, q) - 1.0;
    return q * Complex(std::cos(w * y), std::sin(w * y)) / (y - tau);
  };
  using GK = boost::math::quadrature::gauss_kronrod<double, 61>;
  const Complex mid = GK::integrate(pair, 0.0, d, 12, 1e-15);
  const Complex lo = GK::integrate(left, 0.0, std::pow(1.0 + tau - d, 1.0 / q), 12, 1e-15);
  const Complex hi = GK::integrate(right, tau + d, 1.0, 12, 1e-15);
  return lo + mid + hi;
}

EvalParams near_params(int n, int N, double a) {
  EvalParams p;
  p.n = n;
  p.N = N;
  p.a = a;
  return p;
}

}  // namespace

TEST_CASE("away rule: f = 1 against the closed form") {
  const HilbertResult r = eval_away(registry_get("one"), 50.0, 1.0, 10);
  CHECK(r.regime == Regime::Away);
  CHECK(std::abs(r.value - exact_one(50.0, 1.0)) <= 1e-12);
}

TEST_CASE("away rule: error falls with n for exp:1 and cos_over_cbrt") {
  const OscillandSpec e = registry_get("exp:1");
  const Complex ref = closed_form_exp(1.0, 10.0, 1.0).value;
  double prev = 1.0;
  for (int n = 2; n <= 10; ++n) {
    const double err = std::abs(eval_away(e, 10.0, 1.0, n).value - ref);
    CAPTURE(n);
    CHECK((err < prev || err < 1e-14));
    prev = err;
  }
  const OscillandSpec c = registry_get("cos_over_cbrt");
  const Complex cref = oracle_rotated(c, 20.0, 5.0).value;
  prev = 1.0;
  for (int n = 2; n <= 10; ++n) {
    const double err = std::abs(eval_away(c, 20.0, 5.0, n).value - cref);
    CAPTURE(n);
    CHECK((err < prev || err < 1e-14));
    prev = err;
  }
}

TEST_CASE("away rule order at n = 2") {
  const OscillandSpec e = registry_get("exp:1");
  const std::vector<double> ws = {50, 100, 200, 400};
  std::vector<double> err;
  for (double w : ws) err.push_back(std::abs(eval_away(e, w, 1.0, 2).value - closed_form_exp(1.0, w, 1.0).value));
  CHECK(loglog_slope(ws, err) <= -5.0 + 0.5);
}

TEST_CASE("near method: table cells") {
  const OscillandSpec e = registry_get("exp:1");
  CHECK(std::abs(eval_near(e, 10.0, 0.1, near_params(16, 16, 1.0)).value -
                 closed_form_exp(1.0, 10.0, 0.1).value) <= 1e-11);
  CHECK(std::abs(eval_near(e, 320.0, 0.02, near_params(8, 16, 1.0)).value -
                 closed_form_exp(1.0, 320.0, 0.02).value) <= 1e-13);
  const OscillandSpec s = registry_get("sqrt_over_1p");
  CHECK(std::abs(eval_near(s, 10.0, 1e-4, near_params(16, 16, 1.0)).value - oracle_rotated(s, 10.0, 1e-4).value) <=
        1e-10);
}

TEST_CASE("near method: split point independence") {
  const OscillandSpec s = registry_get("sqrt_over_1p");
  const Complex v1 = eval_near(s, 80.0, 0.02, near_params(16, 32, 1.0)).value;
  const Complex v2 = eval_near(s, 80.0, 0.02, near_params(16, 32, 2.0)).value;
  CHECK(std::abs(v1 - v2) <= 1e-9);
}

TEST_CASE("near method: error estimate and argument checks") {
  const OscillandSpec e = registry_get("exp:1");
  const HilbertResult r = eval_near(e, 20.0, 0.1, {});
  CHECK(r.params.a == 1.0);
  CHECK(r.params.N1 == 64);
  CHECK(r.err_estimate >= 0.0);
  CHECK(r.err_estimate < 1e-8);
  CHECK_THROWS_AS((void)eval_near(e, 20.0, 1.0, near_params(16, 16, 0.5)), ParamError);
  CHECK_THROWS_AS((void)eval_near(e, 20.0, 0.1, near_params(16, 1, 1.0)), ParamError);
  CHECK_THROWS_AS((void)eval_near(e, 0.0, 0.1, {}), DomainError);
  CHECK_THROWS_AS((void)eval_away(e, 20.0, 1.0, 65), ParamError);
}

TEST_CASE("finite CPV kernel against quadrature") {
  for (double alpha : {0.0, 1.0 / 3.0, 0.5}) {
    for (double w : {2.0, 10.0}) {
      for (double tau : {-0.9, -0.5, 0.0, 0.7}) {
        // For alpha > 0 the fixed 32-point tail rule sees a pole at
        // t = i w (1 - tau); once that pole is within ~5 of the origin the rule
        // loses digits (at 0.6i it is good to ~2e-5 only).
        const double rho = w * (1.0 - tau);
        if (alpha > 0.0 && rho < 1.0) continue;
        const double tol = (alpha == 0.0 || rho >= 5.0) ? 1e-12 : 1e-9;
        CAPTURE(alpha);
        CAPTURE(w);
        CAPTURE(tau);
        CHECK(std::abs(finite_cpv_kernel(alpha, w, tau) - kernel_quad(alpha, w, tau)) < tol);
      }
    }
  }
}

TEST_CASE("origin rule") {
  const OscillandSpec one = registry_get("one");
  for (double w : {5.0, 320.0}) {
    for (int n : {1, 4, 16}) {
      CHECK(std::abs(eval_origin(one, w, n).value - Complex(-kEulerGamma - std::log(w), kPi / 2)) <= 1e-13);
    }
  }

  const OscillandSpec e = registry_get("exp:1");
  const Complex v = eval_origin(e, 10.0, 10).value;
  CHECK(std::abs(v - oracle_hadamard(e, 10.0).value) <= 1e-11);
  int best = 1;
  for (int m = 2; m < 20; ++m) {
    if (expand_origin(e, 10.0, m).last_term_mag < expand_origin(e, 10.0, best).last_term_mag) best = m;
  }
  const ExpansionResult x = expand_origin(e, 10.0, best);
  CHECK(std::abs(v - x.value) <= x.last_term_mag);
}

TEST_CASE("origin rule: error falls with n, faster at larger omega") {
  const OscillandSpec s = registry_get("sqrt_over_1p");
  std::vector<std::vector<double>> errs;
  for (double w : {10.0, 80.0}) {
    const Complex ref = oracle_hadamard(s, w).value;
    std::vector<double> e;
    for (int n = 2; n <= 10; ++n) e.push_back(std::abs(eval_origin(s, w, n).value - ref));
    for (std::size_t i = 1; i < e.size(); ++i) CHECK((e[i] < e[i - 1] || e[i] < 1e-14));
    errs.push_back(e);
  }
  for (std::size_t i = 0; i < errs[0].size(); ++i) CHECK(errs[1][i] <= std::max(errs[0][i], 1e-14));
}

TEST_CASE("dispatch") {
  const OscillandSpec e = registry_get("exp:1");
  CHECK(eval_auto(e, 20.0, 0.0).value == eval_origin(e, 20.0, 16).value);
  CHECK(eval_auto(e, 20.0, 0.0).regime == Regime::Origin);
  CHECK(eval_auto(e, 20.0, 0.02).value == eval_near(e, 20.0, 0.02).value);
  CHECK(eval_auto(e, 20.0, 0.02).regime == Regime::Near);
  CHECK(eval_auto(e, 20.0, 2.0).regime == Regime::Away);

  // The transform itself moves by ~1e-4 over 2e-6 at w = 20; the seam jump is
  // what remains after removing the exact change.
  const double xl = kDefaultXSplit - 1e-6, xh = kDefaultXSplit + 1e-6;
  const Complex lo = eval_auto(e, 20.0, xl).value;
  const Complex hi = eval_auto(e, 20.0, xh).value;
  CHECK(eval_auto(e, 20.0, xl).regime == Regime::Near);
  CHECK(eval_auto(e, 20.0, xh).regime == Regime::Away);
  const Complex el = closed_form_exp(1.0, 20.0, xl).value, eh = closed_form_exp(1.0, 20.0, xh).value;
  CHECK(std::abs(lo - el) <= 1e-10);
  CHECK(std::abs(hi - eh) <= 1e-10);
  CHECK(std::abs((lo - hi) - (el - eh)) <= 1e-8);
  CHECK(std::abs(eval_near(e, 20.0, kDefaultXSplit).value - eval_away(e, 20.0, kDefaultXSplit, 16).value) <= 1e-8);
}

TEST_CASE("f = 1 closed form over the grid") {
  // n = 16 leaves ~2e-10 at w = 5 (the Laguerre integrand has a pole at
  // distance w x from the origin); n = 32 is converged everywhere on the grid.
  const OscillandSpec one = registry_get("one");
  const EvalParams p = near_params(32, 32, 0.0);
  for (double w : {5.0, 20.0, 80.0, 320.0}) {
    for (double x : {0.01, 0.1, 1.0, 5.0}) {
      CAPTURE(w);
      CAPTURE(x);
      CHECK(std::abs(eval_auto(one, w, x, p).value - exact_one(w, x)) <= 1e-11);
    }
  }
}

TEST_CASE("accuracy improves with omega") {
  for (const auto& label : registry_labels()) {
    const OscillandSpec s = registry_get(label);
    for (double x : {0.1, 1.0}) {
      double prev = 0;
      for (double w : {20.0, 40.0, 80.0, 160.0}) {
        const double err =
            std::max(std::abs(eval_auto(s, w, x, near_params(8, 16, 0)).value - reference(s, w, x)), 1e-14);
        CAPTURE(label);
        CAPTURE(x);
        CAPTURE(w);
        if (prev > 0) CHECK(err <= 10 * prev);
        prev = err;
      }
    }
  }
}

TEST_CASE("rotated Laguerre sum in long double matches double") {
  const QuadratureRuleL& r = laguerre_rule_ext(0.0, 16);
  const auto v = rotated_laguerre_sum<long double>(r, 20.0L, 1.0L, [](std::complex<long double> z) { return std::exp(-z); });
  const Complex d = rotated_laguerre_sum(laguerre_rule(0.0, 16), 20.0, 1.0, [](Complex z) { return std::exp(-z); });
  CHECK(std::abs(Complex(static_cast<double>(v.real()), static_cast<double>(v.imag())) - d) < 1e-16);
}
