#pragma once

#include <complex>

namespace oht {

/// Complex type paired with a real working type. Specialized for
/// multiprecision reals in oht/multiprecision.hpp.
template <typename Real>
struct ComplexOf {
  using type = std::complex<Real>;
};

template <typename Real>
using complex_t = typename ComplexOf<Real>::type;

}  // namespace oht
