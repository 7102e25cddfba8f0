#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <type_traits>

namespace oht {

using Complex = std::complex<double>;
using ComplexL = std::complex<long double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kEulerGamma = std::numbers::egamma;

template <typename T>
[[nodiscard]] inline bool is_finite(const std::complex<T>& z) noexcept {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// e^{i theta} for real theta.
template <typename T>
[[nodiscard]] inline std::complex<T> expi(T theta) {
  return {std::cos(theta), std::sin(theta)};
}

/// Neumaier (improved Kahan) compensated accumulator.
template <typename V>
class CompensatedSum {
 public:
  void add(const V& v) {
    if constexpr (std::is_arithmetic_v<V>) {
      add_part(sum_, comp_, v);
    } else {
      auto re = sum_.real(), im = sum_.imag();
      auto cre = comp_.real(), cim = comp_.imag();
      add_part(re, cre, v.real());
      add_part(im, cim, v.imag());
      sum_ = V(re, im);
      comp_ = V(cre, cim);
    }
  }
  [[nodiscard]] V value() const { return sum_ + comp_; }

 private:
  template <typename R>
  static void add_part(R& s, R& c, R v) {
    using std::abs;
    const R t = s + v;
    if (abs(s) >= abs(v)) {
      c += (s - t) + v;
    } else {
      c += (v - t) + s;
    }
    s = t;
  }

  V sum_{};
  V comp_{};
};

}  // namespace oht
