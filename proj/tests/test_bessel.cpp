#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oht/bessel.hpp"
#include "oht/error.hpp"
#include "oht/oracle.hpp"
#include "oht/specfun.hpp"

using namespace oht;

namespace {

constexpr BesselKind J0{BesselType::J, 0};
constexpr BesselKind J1{BesselType::J, 1};
constexpr BesselKind Y0{BesselType::Y, 0};
constexpr BesselKind Y1{BesselType::Y, 1};

}  // namespace

TEST_CASE("f = 1, nu = 0 at wx = 1") {
  const OscillandSpec one = registry_get("one");
  const HilbertResult r = eval_bessel_hilbert(one, 1.0, 1.0, J0);
  const double rhs = -kPi / 2 * (struve_h(0, 1.0) + bessel_jyk(0, 1.0).y);
  CHECK(std::abs(r.value - Complex(rhs)) <= 1e-12);
  CHECK(std::abs(bessel_identity_one(0, 1.0, 1.0) - rhs) < 1e-15);
}

TEST_CASE("K-integral route at (5, 1)") {
  const OscillandSpec one = registry_get("one");
  // For f = 1, g_1(y) = 2x, so the J-kind value is -pi Y_0(wx) - (2x/pi) int K_0(wy)/(y^2+x^2) dy.
  const Complex ki = bessel_k_integral(one, 5.0, 1.0, J0);
  const double lhs = -kPi * bessel_jyk(0, 5.0).y - ki.real() / kPi;
  CHECK(std::abs(ki.imag()) < 1e-15);
  CHECK(std::abs(lhs - bessel_identity_one(0, 5.0, 1.0)) <= 1e-8);
}

TEST_CASE("identity grid") {
  const OscillandSpec one = registry_get("one");
  for (double w : {2.0, 5.0, 10.0}) {
    for (double x : {0.5, 1.0, 2.0}) {
      CAPTURE(w);
      CAPTURE(x);
      const Complex v0 = eval_bessel_hilbert(one, w, x, J0).value;
      CHECK(std::abs(v0 + kPi / 2 * (struve_h(0, w * x) + bessel_jyk(0, w * x).y)) <= 1e-8);
      const Complex v1 = eval_bessel_hilbert(one, w, x, J1).value;
      const double id1 = kPi / 2 * (struve_h(-1, w * x) - bessel_jyk(1, w * x).y);
      CHECK(std::abs(v1 - bessel_exact_one(1, w, x)) <= 1e-7);
      CHECK(std::abs(v1 - (id1 - 1.0 / (w * x))) <= 1e-7);
    }
  }
}

TEST_CASE("mesh refinement changes the K-integral by at most 1e-9") {
  const OscillandSpec one = registry_get("one");
  const OscillandSpec e = registry_get("exp:1");
  for (double w : {2.0, 5.0, 10.0}) {
    for (double x : {0.5, 1.0, 2.0}) {
      for (BesselKind bk : {J0, J1, Y0}) {
        const Complex a = bessel_k_integral(one, w, x, bk);
        const Complex b = bessel_k_integral(one, w, x, bk, 1);
        CHECK(std::abs(a - b) <= 1e-9);
      }
      for (BesselKind bk : {J0, Y0}) {
        CHECK(std::abs(bessel_k_integral(e, w, x, bk) - bessel_k_integral(e, w, x, bk, 1)) <= 1e-9);
      }
    }
  }
}

TEST_CASE("both kinds against the direct principal-value oracle") {
  const OscillandSpec e = registry_get("exp:1");
  for (BesselKind bk : {J0, Y0}) {
    const OracleValue o = oracle_bessel_cpv(e, 5.0, 1.0, bk);
    const HilbertResult r = eval_bessel_hilbert(e, 5.0, 1.0, bk);
    CHECK(std::abs(r.value - o.value) <= 1e-6);
    CHECK(r.err_estimate <= 1e-9);
  }
  const OscillandSpec one = registry_get("one");
  CHECK(std::abs(eval_bessel_hilbert(one, 5.0, 1.0, Y0).value - oracle_bessel_cpv(one, 5.0, 1.0, Y0).value) <= 1e-6);
  // J1 with f(0) = 1 exists and carries the origin term -f(0)/(wx).
  CHECK(std::abs(eval_bessel_hilbert(e, 5.0, 1.0, J1).value - oracle_bessel_cpv(e, 5.0, 1.0, J1).value) <= 1e-6);
  for (double w : {2.0, 10.0}) {
    for (double x : {0.5, 2.0}) {
      CHECK(std::abs(eval_bessel_hilbert(one, w, x, J1).value - oracle_bessel_cpv(one, w, x, J1).value) <= 1e-6);
    }
  }
}

TEST_CASE("J1 principal value tends to int J_1(t)/t dt = 1 as x -> 0") {
  CHECK(std::abs(bessel_exact_one(1, 1.0, 1e-6) - 1.0) < 1e-4);
  CHECK(std::abs(eval_bessel_hilbert(registry_get("one"), 1.0, 1e-3, J1).value - 1.0) < 1e-2);
}

TEST_CASE("argument checks") {
  const OscillandSpec one = registry_get("one");
  CHECK_THROWS_AS((void)eval_bessel_hilbert(one, 5.0, 1.0, BesselKind{BesselType::J, 2}), ParamError);
  // Y_1 f / (t - x) is not integrable at 0 unless f(0) = 0.
  CHECK_THROWS_AS((void)eval_bessel_hilbert(one, 5.0, 1.0, Y1), ParamError);
  const OscillandSpec s = registry_get("sqrt_over_1p");
  CHECK_NOTHROW((void)eval_bessel_hilbert(s, 5.0, 1.0, J0));
  CHECK_THROWS_AS((void)eval_bessel_hilbert(one, 0.0, 1.0, J0), DomainError);
  CHECK_THROWS_AS((void)eval_bessel_hilbert(one, 5.0, 0.0, J0), DomainError);
}
