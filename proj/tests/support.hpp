#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "oht/oscispec.hpp"

namespace oht::testing {

/// Least-squares slope of log(y) against log(x).
inline double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

/// Smallest l > m whose x > 0 expansion coefficient sum_{j+k=l} a_j / x^{k+1}
/// is nonzero; the truncation error then scales as w^{-(l+1-alpha)}.
inline int next_order_positive_x(const OscillandSpec& spec, double x, int m) {
  const auto& a = spec.series();
  for (int l = m + 1; l < static_cast<int>(a.size()); ++l) {
    double c = 0.0;
    for (int k = 0; k <= l; ++k) c += a[l - k] * std::pow(x, -(k + 1));
    if (std::abs(c) > 1e-14) return l;
  }
  return -1;
}

/// Smallest l > m with a_l nonzero; the origin truncation error scales as w^{-(l-alpha)}.
inline int next_order_origin(const OscillandSpec& spec, int m) {
  const auto& a = spec.series();
  for (int l = m + 1; l < static_cast<int>(a.size()); ++l) {
    if (a[l] != 0.0) return l;
  }
  return -1;
}

}  // namespace oht::testing
