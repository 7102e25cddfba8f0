#pragma once

#include "oht/complex.hpp"
#include "oht/oscispec.hpp"

namespace oht {

enum class BesselType { J, Y };

struct BesselKind {
  BesselType kind = BesselType::J;
  int nu = 0;  // 0 or 1
};

/// H+(f(t) J_nu(wt))(x) or H+(f(t) Y_nu(wt))(x) through the K_nu integral
/// along the imaginary axis. For J_1 the rotation also picks up -f(0)/(wx)
/// from the pole of K_1 at the origin. err_estimate compares two mesh
/// refinements.
[[nodiscard]] HilbertResult eval_bessel_hilbert(const OscillandSpec& spec, double omega, double x,
                                                BesselKind bk);

/// int_0^inf K_nu(wy) g_j(y) / (y^2 + x^2) dy, j = 1 for J and 2 for Y.
/// refine splits every graded panel on [0, 1/w] into 2^refine pieces and
/// raises the tail Laguerre order from 40 to 64.
[[nodiscard]] Complex bessel_k_integral(const OscillandSpec& spec, double omega, double x,
                                        BesselKind bk, int refine = 0);

/// Right-hand sides of the f = 1 identities: -(pi/2)[H_0(wx) + Y_0(wx)] for
/// nu = 0 and (pi/2)[H_{-1}(wx) - Y_1(wx)] for nu = 1.
[[nodiscard]] double bessel_identity_one(int nu, double omega, double x);

/// The principal value int_0^inf J_nu(wt)/(t - x) dt itself. Equal to
/// bessel_identity_one for nu = 0; for nu = 1 the identity omits the origin
/// term -1/(wx) (the true value tends to 1 as x -> 0).
[[nodiscard]] double bessel_exact_one(int nu, double omega, double x);

}  // namespace oht
