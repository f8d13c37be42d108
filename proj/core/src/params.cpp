#include <gravrabi/params.hpp>

#include <gravrabi/errors.hpp>

#include <cmath>
#include <string>

#include "quad.hpp"

namespace gravrabi {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw DomainError(msg);
}

}  // namespace

void PhysicalParams::validate() const {
  const double all[] = {energy_excited, energy_ground, gamma_excited, gamma_ground, mass,
                        rabi,           laser_freq,    wave_number,   phase,        accel};
  for (double v : all) require(std::isfinite(v), "PhysicalParams: non-finite field");
  require(mass > 0, "PhysicalParams: mass must be > 0");
  require(rabi >= 0, "PhysicalParams: rabi must be >= 0");
  require(gamma_excited >= 0, "PhysicalParams: gamma_excited must be >= 0");
  require(gamma_ground >= 0, "PhysicalParams: gamma_ground must be >= 0");
  require(laser_freq > 0, "PhysicalParams: laser_freq must be > 0");
}

ReducedParams reduce_params(const PhysicalParams& p) {
  p.validate();
  ReducedParams r;
  const double ka = p.wave_number * p.accel;
  r.zeta = ka > 0 ? 1 : (ka < 0 ? -1 : 0);
  if (r.zeta != 0) {
    r.tau_a = 1.0 / std::sqrt(std::abs(ka));
    r.theta = Complex(0.0, p.rabi * p.rabi / (4.0 * ka));
  } else {
    r.tau_a = p.rabi > 0 ? 1.0 / p.rabi : 1.0;
  }
  // omega_L and the Bohr frequency are both large; subtract in quad precision.
  using detail::qreal;
  r.detuning = static_cast<double>(qreal(p.laser_freq) -
                                   (qreal(p.energy_excited) - qreal(p.energy_ground)) / qreal(kHbar));
  r.recoil = kHbar * p.wave_number * p.wave_number / (2.0 * p.mass);
  r.omega_tilde = p.rabi * r.tau_a;
  r.recoil_tilde = r.recoil * r.tau_a;
  r.complex_energy_shift = {Complex(p.energy_excited, -kHbar * p.gamma_excited / 2.0),
                            Complex(p.energy_ground, -kHbar * p.gamma_ground / 2.0)};
  return r;
}

double doppler_detuning(double xi0, double s, int zeta) { return xi0 - zeta * s; }

double reduced_detuning_at(const PhysicalParams& phys, const ReducedParams& red, double p) {
  return red.tau_a * (red.detuning - phys.wave_number * p / phys.mass);
}

OdeGenerators ode_generators(double xi0, double omega_tilde, double s, int zeta) {
  if (!(s >= 0)) throw PreconditionError("ode_generators: s must be >= 0");
  return {Complex(0.0, s * xi0 / 2.0), Complex(0.0, s * omega_tilde / 2.0),
          Complex(0.0, zeta * s * s / 2.0)};
}

ReducedPoint rescale_gravity(const ReducedPoint& pt, double g) {
  if (!(g > 0)) throw DomainError("rescale_gravity: coupling must be > 0");
  if (pt.zeta == 0) return pt;
  const double r = std::sqrt(g);
  return {pt.xi0 / r, pt.omega_tilde / r, pt.s * r, pt.zeta};
}

}  // namespace gravrabi
