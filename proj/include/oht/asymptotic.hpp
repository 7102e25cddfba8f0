#pragma once

#include "oht/complex.hpp"
#include "oht/oscispec.hpp"

namespace oht {

struct ExpansionResult {
  Complex value;
  int terms_used = 0;
  /// Magnitude of the last included term; a truncation-error proxy.
  double last_term_mag = 0.0;
};

/// Large-omega expansion for x > 0 truncated after the term l = m:
/// i pi e^{iwx} f(x) - sum_{l<=m} Gamma(l+1-alpha) w^{-(l+1-alpha)} e^{i pi (l+1-alpha)/2}
///                     sum_{j+k=l} a_j / x^{k+1}.
[[nodiscard]] ExpansionResult expand_positive_x(const OscillandSpec& spec, double omega, double x,
                                                int m);

/// Large-omega expansion of the finite-part integral at x = 0, terms l = 1..m
/// after the leading term. m = 0 returns the leading term alone.
[[nodiscard]] ExpansionResult expand_origin(const OscillandSpec& spec, double omega, int m);

/// Principal value of int_0^inf t^{-alpha} e^{iwt} / (t - x) dt.
[[nodiscard]] Complex cpv_power_kernel(double alpha, double omega, double x);

}  // namespace oht
