#include <gravrabi/approx.hpp>

#include <gravrabi/errors.hpp>

#include <cmath>

#include "quad.hpp"

namespace gravrabi::approx {

using detail::qcomplex;
using detail::qreal;

Matrix2C longtime_w(double xi0, double omega_tilde, double s, int zeta) {
  if (zeta != 1 && zeta != -1) throw PreconditionError("longtime_w: zeta must be +1 or -1");
  if (!std::isfinite(xi0) || !std::isfinite(omega_tilde) || !std::isfinite(s) || omega_tilde < 0)
    throw DomainError("longtime_w: invalid argument");
  const double xs = doppler_detuning(xi0, s, zeta);
  if (std::abs(xs) < 10.0)
    throw PreconditionError("longtime_w: late-time gate |xi(s)| >= 10 violated");
  if (!(-zeta * xs > 0))
    throw PreconditionError("longtime_w: growing-detuning gate -zeta xi(s) > 0 violated");

  namespace mp = boost::multiprecision;
  const qcomplex i(0, 1);
  const qreal pi = detail::q_pi();
  const qreal z(zeta);
  const qreal om(omega_tilde);
  const qreal q = om * om / 4;
  const qreal h = mp::sqrt(qreal(0.5));
  const qcomplex root(h, z * h);  // sqrt(i zeta)
  const qcomplex theta(0, z * q);
  const qcomplex y0 = qcomplex(-z * h, -h) * qreal(xi0);

  const qreal x(xs);
  const qreal lbase = mp::log(-z * x);
  const qreal arg = z * x * x / 4 + z * q * lbase;
  const qcomplex ph1 = mp::exp(qcomplex(pi * om * om / 16, -arg));
  const qcomplex ph2 = mp::exp(qcomplex(-pi * om * om / 16, arg));

  const detail::Weber plus(theta + qreal(0.5));
  const auto pp = plus.u_pair(y0);
  const qcomplex up = pp.u.value;
  const qcomplex vp = plus.v_from(pp).value;
  const detail::Weber minus(theta - qreal(0.5));
  const qcomplex um = minus.u(y0).value;

  const qcomplex gx = qcomplex(0, -z * q);  // Gamma argument -i zeta omega^2/4
  const qcomplex w11 = mp::sqrt(pi / 2) * ph1 * (vp - i * z * up * detail::rgamma(gx));
  qcomplex w12(0);
  if (omega_tilde != 0.0) {
    const qcomplex vm = minus.v_from(minus.u_pair(y0)).value;
    // 4 U / (omega^2 Gamma(gx)) = -i zeta U / Gamma(1 + gx)
    w12 = -root * om * mp::sqrt(pi / 8) * ph1 *
          (vm - i * z * um * detail::rgamma(gx + qreal(1)));
  }
  const qcomplex w21 = root * om / 2 * ph2 * up;
  const qcomplex w22 = ph2 * um;
  return {detail::to_d(w11), detail::to_d(w12), detail::to_d(w21), detail::to_d(w22)};
}

}  // namespace gravrabi::approx
