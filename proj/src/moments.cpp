#include "oht/moments.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>

#include "oht/error.hpp"
#include "oht/specfun.hpp"

namespace oht {

namespace {

constexpr Complex kI{0.0, 1.0};

// std::complex<double> is layout-compatible with LAPACK's complex type.
lapack_complex_double* lc(std::vector<Complex>& v) {
  return reinterpret_cast<lapack_complex_double*>(v.data());
}

void check_common(double alpha, double w, int N) {
  if (!(alpha >= 0.0 && alpha < 1.0)) throw DomainError("moments: alpha must lie in [0,1)");
  if (!(w > 0.0) || !std::isfinite(w)) throw DomainError("moments: omega_tilde must be > 0");
  if (N < 1) throw ParamError("moments: N must be >= 1");
}

// Coefficients of Z_{n+1}, Z_n, Z_{n-1}, Z_{n-2} in the four-term recurrence.
struct Row {
  Complex up, diag, lo1, lo2;
};

Row z_row(double alpha, double w, int n) {
  const double nn = n;
  return {kI * w * (nn - 1.0), 2.0 * (nn - alpha + 1.0) * (nn - 1.0) + kI * w * (nn - 2.0),
          2.0 * nn * (nn + alpha - 2.0) - kI * w * (nn + 1.0), -kI * w * nn};
}

Complex z_rhs(double alpha, double w) { return -std::pow(2.0, 2.0 - alpha) * expi(w); }

std::vector<Complex> z_initial(double alpha, double w) {
  const Complex z = Complex(0.0, -2.0 * w);
  const Complex e = expi(-w);
  auto piece = [&](double a) {
    return e * std::pow(w, -a) * expi(0.5 * kPi * a) * lower_incomplete_gamma(a, z);
  };
  std::vector<Complex> Z(3);
  Z[0] = piece(1.0 - alpha);
  Z[1] = piece(2.0 - alpha) - Z[0];
  Z[2] = 2.0 * piece(3.0 - alpha) - 4.0 * Z[1] - 3.0 * Z[0];
  return Z;
}

// Unknowns Z_s..Z_{N1}; rows are the recurrence at n = s..N1 with Z_{N1+1} = 0.
// Two sub-diagonals and one super-diagonal; LU with partial pivoting.
std::vector<Complex> z_bvp(double alpha, double w, int s, int N1, Complex zs2, Complex zs1) {
  const int m = N1 - s + 1;
  const int kl = 2, ku = 1, ldab = 2 * kl + ku + 1;
  std::vector<Complex> ab(static_cast<std::size_t>(ldab) * m, Complex{});
  std::vector<Complex> b(m, z_rhs(alpha, w));
  auto put = [&](int i, int j, Complex v) {
    ab[static_cast<std::size_t>(kl + ku + i - j) + static_cast<std::size_t>(j) * ldab] = v;
  };
  for (int i = 0; i < m; ++i) {
    const Row r = z_row(alpha, w, s + i);
    put(i, i, r.diag);
    if (i + 1 < m) put(i, i + 1, r.up);
    if (i >= 1) put(i, i - 1, r.lo1);
    if (i >= 2) put(i, i - 2, r.lo2);
  }
  const Row r0 = z_row(alpha, w, s);
  b[0] -= r0.lo1 * zs1 + r0.lo2 * zs2;
  if (m > 1) b[1] -= z_row(alpha, w, s + 1).lo2 * zs1;

  std::vector<lapack_int> ipiv(m);
  const lapack_int info = LAPACKE_zgbsv(LAPACK_COL_MAJOR, m, kl, ku, 1, lc(ab), ldab, ipiv.data(),
                                        lc(b), m);
  if (info != 0) throw SolveError("moments_z: banded system is singular");
  return b;
}

int resolve_n1(int N1, int N) { return N1 == 0 ? 2 * N : N1; }

}  // namespace

MomentTable moments_z(double alpha, double w, int N, int N1, int bvp_start) {
  check_common(alpha, w, N);
  if (N1 < 0) throw ParamError("moments_z: N1 must be >= 0");
  N1 = resolve_n1(N1, N);

  MomentTable t;
  t.alpha = alpha;
  t.omega_tilde = w;
  t.count = N;
  const auto init = z_initial(alpha, w);
  const int n0 = static_cast<int>(std::floor(2.0 * w));
  if (bvp_start < 0) throw ParamError("moments_z: bvp_start must be >= 0");
  // Forward marching loses about three digits per 7 steps beyond k ~ w in double
  // precision, so the boundary-value solve takes over at floor(w), not floor(2w).
  const int s = std::max(bvp_start == 0 ? static_cast<int>(std::floor(w)) : bvp_start, 3);
  const bool bvp = N > s;

  std::vector<Complex> Z = init;
  t.method_tags.assign(3, MomentMethod::ClosedForm);

  const int forward_end = std::min(N, s);  // exclusive
  const Complex rhs = z_rhs(alpha, w);
  for (int n = 2; n + 1 < forward_end; ++n) {
    const Row r = z_row(alpha, w, n);
    Z.push_back((rhs - r.diag * Z[n] - r.lo1 * Z[n - 1] - r.lo2 * Z[n - 2]) / r.up);
    t.method_tags.push_back(MomentMethod::Forward);
  }

  if (bvp) {
    if (N1 < std::max(n0, N)) throw ParamError("moments_z: N1 must be >= max(floor(2w), N)");
    const auto sol = z_bvp(alpha, w, s, N1, Z[s - 2], Z[s - 1]);
    for (int k = s; k < N; ++k) {
      Z.push_back(sol[k - s]);
      t.method_tags.push_back(MomentMethod::BVP);
    }
    t.N1 = N1;
  }
  Z.resize(N);
  t.method_tags.resize(N);
  t.values = std::move(Z);
  return t;
}

MomentTable moments_m(double w, int N, int N1) {
  check_common(0.0, w, N);
  if (N1 < 0) throw ParamError("moments_m: N1 must be >= 0");
  N1 = resolve_n1(N1, N);

  MomentTable t;
  t.omega_tilde = w;
  t.count = N;
  const Complex iw = kI * w;
  auto rhs = [&](int l) {
    return (2.0 / iw) * (expi(w) - ((l % 2 == 0) ? 1.0 : -1.0) * expi(-w));
  };
  std::vector<Complex> M = {2.0 * std::sin(w) / w,
                            4.0 * kI * (std::sin(w) / (w * w) - std::cos(w) / w)};
  t.method_tags = {MomentMethod::ClosedForm, MomentMethod::ClosedForm};

  const int s = std::max(static_cast<int>(std::floor(w)) + 1, 2);
  for (int l = 2; l < std::min(N, s); ++l) {
    M.push_back(rhs(l) - (2.0 * l / iw) * M[l - 1] + M[l - 2]);
    t.method_tags.push_back(MomentMethod::Forward);
  }
  M.resize(std::min<std::size_t>(M.size(), static_cast<std::size_t>(N)));
  t.method_tags.resize(M.size());

  if (N > s) {
    if (N1 < N) throw ParamError("moments_m: N1 must be >= N");
    // Row r is the recurrence at l = r + 1: M_{r+1} + (2(r+1)/(iw)) M_r - M_{r-1} = rhs(r+1).
    const int m = N1 - s + 1;
    std::vector<Complex> dl(std::max(m - 1, 0), -1.0), d(m), du(std::max(m - 1, 0), 1.0), b(m);
    for (int i = 0; i < m; ++i) {
      const int r = s + i;
      d[i] = 2.0 * (r + 1) / iw;
      b[i] = rhs(r + 1);
    }
    b[0] += M[s - 1];
    const lapack_int info =
        LAPACKE_zgtsv(LAPACK_COL_MAJOR, m, 1, lc(dl), lc(d), lc(du), lc(b), m);
    if (info != 0) throw SolveError("moments_m: tridiagonal system is singular");
    for (int k = s; k < N; ++k) {
      M.push_back(b[k - s]);
      t.method_tags.push_back(MomentMethod::BVP);
    }
    t.N1 = N1;
  }
  t.values = std::move(M);
  return t;
}

Complex z_from_m(double w, int k, const std::vector<Complex>& m) {
  if (k == 0) return m.at(0);
  const Complex iw = kI * w;
  const double sign = (k % 2 == 0) ? 1.0 : -1.0;
  return (expi(w) - sign * expi(-w)) / iw - (static_cast<double>(k) / iw) * m.at(k - 1);
}

MomentTable moments_z_via_m(double w, int N, int N1) {
  const MomentTable m = moments_m(w, N, N1);
  MomentTable t;
  t.omega_tilde = w;
  t.count = N;
  t.N1 = m.N1;
  t.values.resize(N);
  t.method_tags.resize(N);
  for (int k = 0; k < N; ++k) {
    t.values[k] = z_from_m(w, k, m.values);
    t.method_tags[k] = k == 0 ? m.method_tags[0] : m.method_tags[k - 1];
  }
  return t;
}

Complex z_recurrence_residual(double alpha, double w, const std::vector<Complex>& Z, int n) {
  const Row r = z_row(alpha, w, n);
  return r.up * Z.at(n + 1) + r.diag * Z.at(n) + r.lo1 * Z.at(n - 1) + r.lo2 * Z.at(n - 2) -
         z_rhs(alpha, w);
}

}  // namespace oht
