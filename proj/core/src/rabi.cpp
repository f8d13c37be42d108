#include <gravrabi/approx.hpp>

#include <gravrabi/errors.hpp>

#include <cmath>

#include "series_helpers.hpp"

namespace gravrabi::approx {

RabiFrequency rabi_frequency(double xi0, double omega_tilde) {
  return {Complex(std::hypot(omega_tilde, xi0), 0.0), omega_tilde == 0.0};
}

Matrix2C rabi_w(double xi0, double omega_tilde, double s) {
  if (!std::isfinite(xi0) || !std::isfinite(omega_tilde) || !std::isfinite(s))
    throw DomainError("rabi_w: non-finite argument");
  const double w = std::hypot(omega_tilde, xi0);
  const double x = w * s / 2.0;
  const double c = std::cos(x);
  const double sw = 0.5 * s * detail::sinc(x);  // sin(x) / omega_hat
  const Complex i(0.0, 1.0);
  return {c + i * xi0 * sw, i * omega_tilde * sw, i * omega_tilde * sw, c - i * xi0 * sw};
}

std::pair<double, double> resonant_asymptotic_amplitudes(double omega_tilde) {
  if (!(omega_tilde >= 0)) throw DomainError("resonant_asymptotic_amplitudes: omega must be >= 0");
  const double e = std::exp(-M_PI * omega_tilde * omega_tilde / 4.0);
  return {std::sqrt(0.5 * (1.0 + e)), std::sqrt(0.5 * (1.0 - e))};
}

}  // namespace gravrabi::approx
