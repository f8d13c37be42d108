#pragma once

#include <cmath>

namespace gravrabi::detail {

/// sin(x)/x
inline double sinc(double x) {
  if (std::abs(x) < 1e-4) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sin(x) / x;
}

/// (cos x - sin(x)/x) / x^2
inline double cos_minus_sinc_over_x2(double x) {
  if (std::abs(x) < 1e-3) {
    const double x2 = x * x;
    return -1.0 / 3.0 + x2 / 30.0 - x2 * x2 / 840.0;
  }
  return (std::cos(x) - std::sin(x) / x) / (x * x);
}

}  // namespace gravrabi::detail
