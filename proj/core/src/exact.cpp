#include <gravrabi/exact.hpp>

#include <gravrabi/approx.hpp>
#include <gravrabi/errors.hpp>

#include <cmath>

#include "quad.hpp"

namespace gravrabi::exact {

using detail::qabs;
using detail::qcomplex;
using detail::qreal;
using detail::Weber;

struct WEvaluator::Impl {
  qcomplex theta;
  qcomplex root;       // sqrt(i zeta) = e^{i zeta pi/4}
  qcomplex y_of_xi;    // y = y_of_xi * xi
  qcomplex r_over_eps; // R / eps = i omega / (2 sqrt(i zeta))
  Weber minus;         // order theta - 1/2
  Weber plus;          // order theta + 1/2

  Impl(const qcomplex& th, const qcomplex& rt, const qcomplex& yx, const qcomplex& re)
      : theta(th), root(rt), y_of_xi(yx), r_over_eps(re),
        minus(th - qreal(0.5)), plus(th + qreal(0.5)) {}
};

WEvaluator::WEvaluator(double omega_tilde, int zeta) : omega_tilde_(omega_tilde), zeta_(zeta) {
  if (zeta != 1 && zeta != -1)
    throw PreconditionError("w_matrix: zeta must be +1 or -1 (use the Rabi form for zeta = 0)");
  if (!std::isfinite(omega_tilde) || omega_tilde < 0)
    throw DomainError("w_matrix: omega_tilde must be finite and >= 0");
  const qreal om(omega_tilde);
  const qcomplex i(0, 1);
  const qreal h = boost::multiprecision::sqrt(qreal(0.5));
  const qcomplex root(h, qreal(zeta) * h);
  const qcomplex theta(0, qreal(zeta) * om * om / 4);
  // -i / sqrt(i zeta) = (-zeta - i)/sqrt(2)
  const qcomplex y_of_xi(-qreal(zeta) * h, -h);
  const qcomplex r_over_eps = i * om / (qreal(2) * root);
  impl_ = std::make_unique<Impl>(theta, root, y_of_xi, r_over_eps);
}

WEvaluator::~WEvaluator() = default;
WEvaluator::WEvaluator(WEvaluator&&) noexcept = default;
WEvaluator& WEvaluator::operator=(WEvaluator&&) noexcept = default;

WEvaluation WEvaluator::operator()(double xi0, double s) const {
  if (!std::isfinite(xi0) || !std::isfinite(s)) throw DomainError("w_matrix: non-finite argument");
  if (s < 0) throw PreconditionError("w_matrix: s must be >= 0");
  const Impl& m = *impl_;
  // xi1 in quad: at large detuning y^2 amplifies the rounding of xi0 - s.
  const qreal xi1 = qreal(xi0) - zeta_ * qreal(s);
  const qcomplex y0 = m.y_of_xi * qreal(xi0);
  const qcomplex y1 = m.y_of_xi * xi1;

  const bool laser = omega_tilde_ != 0.0;
  const qreal eps = detail::q_eps();

  // Order theta + 1/2 always carries V; order theta - 1/2 has a V pole at
  // theta = 0, where every term using it has a vanishing coefficient.
  const auto pp0 = m.plus.u_pair(y0), pp1 = m.plus.u_pair(y1);
  const auto pm0 = m.minus.u_pair(y0), pm1 = m.minus.u_pair(y1);
  const detail::QResult up0 = pp0.u, up1 = pp1.u, um0 = pm0.u, um1 = pm1.u;
  const detail::QResult vp0 = m.plus.v_from(pp0), vp1 = m.plus.v_from(pp1);
  detail::QResult vm0, vm1;
  if (laser) {
    vm0 = m.minus.v_from(pm0);
    vm1 = m.minus.v_from(pm1);
  }

  const qreal k = boost::multiprecision::sqrt(detail::q_pi() / 2);
  struct Acc {
    qcomplex v{0};
    qreal e{0};
    void add(const qcomplex& c, const detail::QResult& a, const detail::QResult& b, qreal eps) {
      const qcomplex t = c * a.value * b.value;
      v += t;
      const qreal ac = qabs(c);
      e += ac * (a.err * qabs(b.value) + qabs(a.value) * b.err) + eps * qabs(t) * 4;
    }
  };

  Acc w11, w12, w21, w22;
  w11.add(k, vp0, um1, eps);
  w22.add(k, um0, vp1, eps);
  if (laser) {
    w11.add(k * m.theta, up0, vm1, eps);
    w22.add(k * m.theta, vm0, up1, eps);
    const qcomplex kr = k * m.r_over_eps;
    w12.add(kr, um0, vm1, eps);
    w12.add(-kr, vm0, um1, eps);
    w21.add(kr, up0, vp1, eps);
    w21.add(-kr, vp0, up1, eps);
  }

  WEvaluation out;
  out.w = {detail::to_d(w11.v), detail::to_d(w12.v), detail::to_d(w21.v), detail::to_d(w22.v)};
  const qreal worst = std::max({w11.e, w12.e, w21.e, w22.e});
  out.abs_error_estimate = static_cast<double>(worst) + 2.3e-16;
  if (!all_finite(out.w)) throw DomainError("w_matrix: non-finite result");
  return out;
}

WEvaluation w_matrix_checked(double xi0, double omega_tilde, double s, int zeta) {
  return WEvaluator(omega_tilde, zeta)(xi0, s);
}

Matrix2C w_matrix(double xi0, double omega_tilde, double s, int zeta) {
  return w_matrix_checked(xi0, omega_tilde, s, zeta).w;
}

Matrix2C internal_evolution(double xi0, double omega_tilde, double s, int zeta) {
  if (zeta == 0) return approx::rabi_w(xi0, omega_tilde, s);
  return w_matrix(xi0, omega_tilde, s, zeta);
}

Matrix2C UBlocks::assembled() const {
  const Complex de = diag_phase.first * global_phase;
  const Complex dg = diag_phase.second * global_phase;
  return {de * w_shift_minus.w11, de * kick.laser_phase_up * w_shift_minus.w12,
          dg * kick.laser_phase_down * w_shift_plus.w21, dg * w_shift_plus.w22};
}

namespace {

// exp(decay + i arg) with the phase reduced modulo 2 pi before rounding, so
// large optical phases from different factors still cancel to double accuracy.
Complex exp_phase(const qreal& decay, const qreal& arg) {
  const qreal two_pi = 2 * detail::q_pi();
  const qreal r = arg - two_pi * boost::multiprecision::round(arg / two_pi);
  return std::polar(std::exp(static_cast<double>(decay)), static_cast<double>(r));
}

}  // namespace

PhaseFactors phase_factors(double p, double t, const PhysicalParams& phys,
                           const ReducedParams& red) {
  const qreal qt(t), k(phys.wave_number);
  const qreal doppler = k * qreal(p) / qreal(phys.mass);
  const qreal arg = -qt * (qreal(phys.laser_freq) - doppler) / 2 + k * qreal(phys.accel) * qt * qt / 4;
  const qreal dgam = (qreal(phys.gamma_excited) - qreal(phys.gamma_ground)) * qt / 4;
  PhaseFactors f;
  f.diag = {exp_phase(-dgam, arg), exp_phase(dgam, -arg)};
  const qreal eavg = (qreal(phys.energy_excited) + qreal(phys.energy_ground)) / (2 * qreal(kHbar));
  const qreal gsum = (qreal(phys.gamma_excited) + qreal(phys.gamma_ground)) * qt / 4;
  f.global = exp_phase(-gsum, -qt * (eavg + qreal(red.recoil) / 2));
  return f;
}

UBlocks evolution_blocks(double p, double t, const PhysicalParams& phys) {
  if (!(t >= 0)) throw PreconditionError("evolution_blocks: t must be >= 0");
  const ReducedParams red = reduce_params(phys);
  const double hk = kHbar * phys.wave_number;
  const double s = t / red.tau_a;
  UBlocks b;
  if (red.omega_tilde == 0.0) {
    // No coupling: W is diagonal with a known phase. Build it in quad so the
    // (possibly enormous) detuning phase cancels against the other factors.
    const qreal qt(t), k(phys.wave_number), m(phys.mass);
    const qreal delta = qreal(phys.laser_freq) -
                        (qreal(phys.energy_excited) - qreal(phys.energy_ground)) / qreal(kHbar);
    auto diag = [&](double mom) {
      const qreal phi = qt * (delta - k * qreal(mom) / m) / 2 - k * qreal(phys.accel) * qt * qt / 4;
      const Complex e = exp_phase(0, phi);
      return Matrix2C::diagonal(e, std::conj(e));
    };
    b.w_shift_minus = diag(p - hk / 2.0);
    b.w_shift_plus = diag(p + hk / 2.0);
  } else {
    b.w_shift_minus = internal_evolution(reduced_detuning_at(phys, red, p - hk / 2.0),
                                         red.omega_tilde, s, red.zeta);
    b.w_shift_plus = internal_evolution(reduced_detuning_at(phys, red, p + hk / 2.0),
                                        red.omega_tilde, s, red.zeta);
  }
  const PhaseFactors f = phase_factors(p, t, phys, red);
  b.diag_phase = f.diag;
  b.global_phase = f.global;
  b.kick.up = hk;
  b.kick.down = -hk;
  b.kick.laser_phase_up = std::exp(Complex(0.0, -phys.phase));
  b.kick.laser_phase_down = std::exp(Complex(0.0, phys.phase));
  return b;
}

Matrix2C free_fall_operator(double /*p*/, double t, const PhysicalParams& phys) {
  phys.validate();
  auto f = [t](double e, double g) {
    return exp_phase(-qreal(g) * qreal(t) / 2, -qreal(e) * qreal(t) / qreal(kHbar));
  };
  return Matrix2C::diagonal(f(phys.energy_excited, phys.gamma_excited),
                            f(phys.energy_ground, phys.gamma_ground));
}

}  // namespace gravrabi::exact
