#include <gravrabi/approx.hpp>

#include <gravrabi/errors.hpp>

#include <cmath>

#include "series_helpers.hpp"

namespace gravrabi::approx {

Matrix2C weak_gravity_w(double xi0, double omega_tilde, double s, int zeta, Diagnostics* diag) {
  if (!std::isfinite(xi0) || !std::isfinite(omega_tilde) || !std::isfinite(s))
    throw DomainError("weak_gravity_w: non-finite argument");
  if (s > 1.0 && diag)
    diag->warnings.push_back("weak_gravity_w: s > 1 is outside the weak-gravity regime");

  const double w = std::hypot(omega_tilde, xi0);
  const double x = w * s / 2.0;
  const double c = std::cos(x);
  const double sc = detail::sinc(x);
  const double sw = 0.5 * s * sc;                                  // sin(x)/w
  const double q = 0.25 * s * s * detail::cos_minus_sinc_over_x2(x);  // (c - sc)/w^2
  const Complex i(0.0, 1.0);

  const double g2 = zeta * s * s;  // k.a t^2
  const double g1 = zeta * s;      // k.a t

  Matrix2C m;
  m.w11 = c + i * xi0 * sw + i / 4.0 * g2 * (-xi0 * xi0 * q - i * xi0 * sw - sc);
  m.w12 = i * omega_tilde * sw - 0.5 * g1 * omega_tilde * q * (1.0 + i * s * xi0 / 2.0);
  m.w21 = i * omega_tilde * sw + 0.5 * g1 * omega_tilde * q * (1.0 - i * s * xi0 / 2.0);
  m.w22 = c - i * xi0 * sw + i / 4.0 * g2 * (xi0 * xi0 * q - i * xi0 * sw + sc);
  return m;
}

}  // namespace gravrabi::approx
