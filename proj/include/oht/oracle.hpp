#pragma once

#include <vector>

#include "oht/bessel.hpp"
#include "oht/complex.hpp"
#include "oht/oscispec.hpp"

namespace oht {

enum class OracleMethod { RotatedContour, DirectCPV, ClosedForm, Hadamard };

struct OracleValue {
  Complex value;
  OracleMethod method = OracleMethod::RotatedContour;
  double est_err = 0.0;
};

/// i pi e^{iwx} f(x) + int_0^inf e^{-wp} f(ip) / (p + ix) dp by adaptive
/// Gauss-Kronrod on geometric panels. Throws OracleError if w <= growth_d.
[[nodiscard]] OracleValue oracle_rotated(const OscillandSpec& spec, double omega, double x);

/// The principal value straight from its definition: symmetric excision
/// around x with Richardson extrapolation in the excision radius, and a
/// half-period block tail accelerated by Wynn's epsilon algorithm.
[[nodiscard]] OracleValue oracle_cpv_direct(const OscillandSpec& spec, double omega, double x);

/// Exact H+(e^{-ct} e^{iwt})(x) as a double series in E_1 and Si. Requires
/// c x <= 30.
[[nodiscard]] OracleValue closed_form_exp(double c, double omega, double x);

/// Finite-part integral at x = 0: closed-form kernel for a_0 t^{-alpha-1}
/// plus the regularized remainder integrated on the real axis.
[[nodiscard]] OracleValue oracle_hadamard(const OscillandSpec& spec, double omega);

/// Principal value of int_0^inf f(t) B_nu(wt) / (t - x) dt with B = J or Y,
/// by the same machinery as oracle_cpv_direct.
[[nodiscard]] OracleValue oracle_bessel_cpv(const OscillandSpec& spec, double omega, double x,
                                            BesselKind bk);

/// Wynn epsilon acceleration of a sequence of partial sums. Returns the
/// accelerated limit and a difference-based error estimate.
[[nodiscard]] OracleValue wynn_epsilon(const std::vector<Complex>& partial_sums);

}  // namespace oht
