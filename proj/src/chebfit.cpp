#include "oht/chebfit.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>

#include "oht/error.hpp"

namespace oht {

namespace {

std::mutex& fftw_planner_mutex() {
  static std::mutex m;
  return m;
}

// FFTW REDFT00: Y_k = X_0 + (-1)^k X_N + 2 sum_{j=1}^{N-1} X_j cos(pi j k / N).
std::vector<double> dct1(const std::vector<double>& x) {
  const int n = static_cast<int>(x.size());
  std::vector<double> in(x);
  std::vector<double> out(n);
  fftw_plan plan;
  {
    std::lock_guard lock(fftw_planner_mutex());
    plan = fftw_plan_r2r_1d(n, in.data(), out.data(), FFTW_REDFT00, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard lock(fftw_planner_mutex());
    fftw_destroy_plan(plan);
  }
  return out;
}

}  // namespace

std::vector<double> cc_points(int N) {
  std::vector<double> y(N + 1);
  // sin form keeps the points exactly antisymmetric about 0.
  for (int j = 0; j <= N; ++j) y[j] = std::sin(kPi * (N - 2.0 * j) / (2.0 * N));
  return y;
}

Complex chebyshev_sum(const std::vector<Complex>& c, double y, Halving halving) {
  if (c.empty()) return {};
  const int n = static_cast<int>(c.size()) - 1;
  if (n == 0) return 0.5 * c[0];
  Complex b1 = halving == Halving::DoublePrime ? 0.5 * c[n] : c[n];
  Complex b2 = 0.0;
  for (int k = n - 1; k >= 1; --k) {
    const Complex t = c[k] + 2.0 * y * b1 - b2;
    b2 = b1;
    b1 = t;
  }
  return 0.5 * c[0] + y * b1 - b2;
}

Complex ChebInterpolant::eval(double y) const {
  return chebyshev_sum(coeffs_, y, Halving::DoublePrime);
}

ChebInterpolant ChebInterpolant::from_coeffs(std::vector<Complex> coeffs) {
  if (coeffs.size() < 2) throw ParamError("ChebInterpolant: need N >= 1");
  const int N = static_cast<int>(coeffs.size()) - 1;
  const auto y = cc_points(N);
  std::vector<Complex> samples(N + 1);
  for (int j = 0; j <= N; ++j) samples[j] = chebyshev_sum(coeffs, y[j], Halving::DoublePrime);
  return ChebInterpolant(std::move(samples), std::move(coeffs));
}

ChebInterpolant fit(const std::function<Complex(double)>& h, int N) {
  if (N < 2) throw ParamError("fit: N must be >= 2");
  const auto y = cc_points(N);
  std::vector<Complex> samples(N + 1);
  std::vector<double> re(N + 1), im(N + 1);
  for (int j = 0; j <= N; ++j) {
    samples[j] = h(y[j]);
    if (!is_finite(samples[j])) throw EvalError("fit: non-finite sample", static_cast<std::size_t>(j));
    re[j] = samples[j].real();
    im[j] = samples[j].imag();
  }
  const auto cr = dct1(re);
  const auto ci = dct1(im);
  std::vector<Complex> a(N + 1);
  for (int k = 0; k <= N; ++k) a[k] = Complex(cr[k], ci[k]) / static_cast<double>(N);
  return ChebInterpolant(std::move(samples), std::move(a));
}

Complex eval_barycentric(const ChebInterpolant& p, double tau) {
  const int N = p.N();
  const auto y = cc_points(N);
  const auto& s = p.samples();
  Complex num = 0.0;
  double den = 0.0;
  for (int j = 0; j <= N; ++j) {
    const double d = tau - y[j];
    if (d == 0.0) return s[j];
    double w = (j % 2 == 0) ? 1.0 : -1.0;
    if (j == 0 || j == N) w *= 0.5;
    num += (w / d) * s[j];
    den += w / d;
  }
  return num / den;
}

std::vector<Complex> difference_quotient_coeffs(const ChebInterpolant& p, double tau) {
  const auto& a = p.coeffs();
  const int N = p.N();
  std::vector<Complex> b(N + 1, Complex{});
  b[N - 1] = a[N];
  for (int k = N - 1; k >= 1; --k) {
    b[k - 1] = 2.0 * a[k] + 2.0 * tau * b[k] - b[k + 1];
  }
  b.pop_back();
  return b;
}

}  // namespace oht
