#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include "oht/precision.hpp"

namespace oht {

/// 50-digit types for precision studies that double cannot resolve.
using Real50 = boost::multiprecision::cpp_bin_float_50;
using Complex50 = boost::multiprecision::cpp_complex_50;

template <>
struct ComplexOf<Real50> {
  using type = Complex50;
};

}  // namespace oht
