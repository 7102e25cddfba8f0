#pragma once

#include <functional>
#include <vector>

#include "oht/complex.hpp"

namespace oht {

/// Halving conventions used by the Chebyshev sums in this module.
enum class Halving {
  DoublePrime,  // first and last terms halved (interpolant coefficients a_k)
  Prime,        // first term halved (difference-quotient coefficients b_k)
};

/// Interpolant of h at the Clenshaw-Curtis points y_j = cos(j pi / N),
/// p_N(y) = sum''_{k=0}^{N} a_k T_k(y).
class ChebInterpolant {
 public:
  /// Builds from coefficients; samples are evaluated at the nodes. N >= 1.
  static ChebInterpolant from_coeffs(std::vector<Complex> coeffs);

  [[nodiscard]] int N() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] const std::vector<Complex>& samples() const noexcept { return samples_; }
  [[nodiscard]] const std::vector<Complex>& coeffs() const noexcept { return coeffs_; }
  [[nodiscard]] static constexpr Halving coeff_halving() noexcept { return Halving::DoublePrime; }

  /// p_N(y) by Clenshaw recurrence, any real y.
  [[nodiscard]] Complex eval(double y) const;

 private:
  friend ChebInterpolant fit(const std::function<Complex(double)>& h, int N);
  ChebInterpolant(std::vector<Complex> samples, std::vector<Complex> coeffs)
      : samples_(std::move(samples)), coeffs_(std::move(coeffs)) {}

  std::vector<Complex> samples_;
  std::vector<Complex> coeffs_;
};

/// Clenshaw-Curtis points cos(j pi / N), j = 0..N.
[[nodiscard]] std::vector<double> cc_points(int N);

/// Samples h at the N+1 points and forms a_k = (2/N) sum''_j h(y_j) cos(j k pi / N)
/// by a fast cosine transform. N >= 2.
[[nodiscard]] ChebInterpolant fit(const std::function<Complex(double)>& h, int N);

/// p_N(tau) from the barycentric formula; returns the stored sample at a node.
[[nodiscard]] Complex eval_barycentric(const ChebInterpolant& p, double tau);

/// b_0..b_{N-1} with sum'_k b_k T_k(y) = (p_N(y) - p_N(tau)) / (y - tau).
[[nodiscard]] std::vector<Complex> difference_quotient_coeffs(const ChebInterpolant& p, double tau);

/// sum_k c_k T_k(y) with the given halving convention.
[[nodiscard]] Complex chebyshev_sum(const std::vector<Complex>& c, double y, Halving halving);

}  // namespace oht
