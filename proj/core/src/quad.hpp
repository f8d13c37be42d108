#pragma once

// binary128 kernels shared by the special-function, exact and long-time code.

#include <boost/multiprecision/complex128.hpp>
#include <boost/multiprecision/float128.hpp>

#include <gravrabi/specfun.hpp>
#include <gravrabi/types.hpp>

namespace gravrabi::detail {

using qreal = boost::multiprecision::float128;
using qcomplex = boost::multiprecision::complex128;

inline qcomplex to_q(Complex z) { return qcomplex(qreal(z.real()), qreal(z.imag())); }
inline Complex to_d(const qcomplex& z) {
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}
inline qreal qabs(const qcomplex& z) { return boost::multiprecision::abs(z); }
inline qreal qnorm(const qcomplex& z) { return z.real() * z.real() + z.imag() * z.imag(); }

const qreal& q_pi();
const qreal& q_eps();

bool is_nonpositive_integer(const qcomplex& z);
void require_finite(Complex z, const char* what);

/// ln Gamma on the principal branch; throws PoleError.
qcomplex ln_gamma(const qcomplex& z);
/// 1/Gamma, exactly zero at the poles.
qcomplex rgamma(const qcomplex& z);

/// A value with an absolute error bound.
struct QResult {
  qcomplex value;
  qreal err = 0;
  specfun::Method method = specfun::Method::series;
  bool reflected = false;
};

specfun::SpecFunResult to_result(const QResult& r);

/// 1F1(a; b; .) with the parameter-only gamma values cached.
class Kummer {
 public:
  Kummer(const qcomplex& a, const qcomplex& b, const specfun::KummerOptions& opt = {});

  QResult operator()(const qcomplex& z) const;
  QResult series(const qcomplex& z) const;
  QResult asymptotic(const qcomplex& z) const;

 private:
  QResult series_in(const qcomplex& a, const qcomplex& z) const;

  qcomplex a_, b_;
  bool b_real_;
  bool terminating_;
  bool t1_present_, t2_present_;
  qcomplex lg_b_, lg_bma_, lg_a_;
  specfun::KummerOptions opt_;
};

/// Parabolic cylinder functions U(alpha, .) and V(alpha, .) of one order.
class Weber {
 public:
  explicit Weber(const qcomplex& alpha);

  struct Pair {
    QResult u;      // U(alpha, y)
    QResult u_neg;  // U(alpha, -y)
  };
  struct UV {
    QResult u, v;
  };

  Pair u_pair(const qcomplex& y) const;
  QResult u(const qcomplex& y) const { return u_pair(y).u; }
  /// V from the pair; throws PoleError when alpha + 1/2 is a pole.
  QResult v_from(const Pair& p) const;
  UV uv(const qcomplex& y) const;
  /// V(alpha, y) and V(alpha, -y) from the even/odd Weber solutions with the
  /// values at y = 0; entire in alpha, so also defined where alpha + 1/2 is a pole.
  Pair v_regular(const qcomplex& y) const;

  /// Derivatives from differentiating the 1F1 representation.
  Pair u_prime_pair(const qcomplex& y) const;
  QResult v_prime(const qcomplex& y) const;

  const qcomplex& alpha() const { return alpha_; }
  bool has_v() const { return has_v_; }

 private:
  QResult recessive(const qcomplex& y) const;

  qcomplex alpha_;
  qcomplex a1_, a2_;
  Kummer k1_, k2_;
  qcomplex inv_c1_, inv_c2_;
  bool has_v_;
  qcomplex v_factor_;  // Gamma(alpha+1/2)/pi
  qcomplex sin_pi_alpha_;
  qcomplex r_half_plus_alpha_;  // 1/Gamma(1/2+alpha)
};

}  // namespace gravrabi::detail
