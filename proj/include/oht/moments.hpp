#pragma once

#include <vector>

#include "oht/complex.hpp"

namespace oht {

enum class MomentMethod { ClosedForm, Forward, BVP };

/// Z_k = int_{-1}^{1} (1+y)^{-alpha} T_k(y) e^{i w y} dy for k < count, or the
/// U-moments M_k when produced by moments_m.
struct MomentTable {
  double alpha = 0.0;
  double omega_tilde = 0.0;
  int count = 0;
  std::vector<Complex> values;
  std::vector<MomentMethod> method_tags;
  int N1 = 0;  // BVP truncation; 0 if the BVP was not used
};

/// Z_0..Z_{N-1}. Closed forms for k <= 2, forward recurrence up to
/// bvp_start - 1, banded boundary-value solve from bvp_start on with
/// Z_{N1+1} = 0. N1 = 0 selects 2N; bvp_start = 0 selects max(floor(w), 3).
/// Pass bvp_start >= N for a purely forward table.
[[nodiscard]] MomentTable moments_z(double alpha, double omega_tilde, int N, int N1 = 0,
                                    int bvp_start = 0);

/// M_k = int_{-1}^{1} U_k(y) e^{i w y} dy for k < N. Forward for k <= w,
/// tridiagonal boundary-value solve beyond with M_{N1+1} = 0.
[[nodiscard]] MomentTable moments_m(double omega_tilde, int N, int N1 = 0);

/// Z_k^{(0)} from the U-moments: Z_0 = M_0 and, for k >= 1,
/// Z_k = (e^{iw} - (-1)^k e^{-iw}) / (iw) - k M_{k-1} / (iw).
[[nodiscard]] Complex z_from_m(double omega_tilde, int k, const std::vector<Complex>& m);

/// Z_0^{(0)}..Z_{N-1}^{(0)} via moments_m(w, N, N1).
[[nodiscard]] MomentTable moments_z_via_m(double omega_tilde, int N, int N1 = 0);

/// Left minus right side of the four-term recurrence at index n (2 <= n < Z.size() - 1).
[[nodiscard]] Complex z_recurrence_residual(double alpha, double omega_tilde,
                                            const std::vector<Complex>& Z, int n);

}  // namespace oht
