#pragma once

#include <gravrabi/types.hpp>

namespace gravrabi {

/// Reduced Planck constant, J s.
inline constexpr double kHbar = 1.054571817e-34;

/// SI description of atom, laser and gravity. k and a are signed components
/// along one common axis.
struct PhysicalParams {
  double energy_excited = 0.0;  // E_e, J
  double energy_ground = 0.0;   // E_g, J
  double gamma_excited = 0.0;   // 1/s
  double gamma_ground = 0.0;    // 1/s
  double mass = 0.0;            // kg
  double rabi = 0.0;            // Omega, rad/s
  double laser_freq = 0.0;      // omega_L, rad/s
  double wave_number = 0.0;     // k, 1/m
  double phase = 0.0;           // phi, rad
  double accel = 0.0;           // a, m/s^2

  /// Throws DomainError naming the violated field.
  void validate() const;
};

/// Dimensionless groups. When zeta == 0 there is no gravitational time scale;
/// tau_a then holds the time unit used for the reduced quantities (1/Omega,
/// or one second without a laser) and theta is left at zero.
struct ReducedParams {
  double tau_a = 0.0;
  int zeta = 0;
  Complex theta{0.0, 0.0};
  double detuning = 0.0;  // Delta = omega_L - (E_e - E_g)/hbar, rad/s
  double recoil = 0.0;    // delta = hbar k^2 / 2M, rad/s
  double omega_tilde = 0.0;
  double recoil_tilde = 0.0;
  /// (E_e - i hbar gamma_e/2, E_g - i hbar gamma_g/2), J
  ComplexPair complex_energy_shift;

  bool gravity_free() const { return zeta == 0; }
};

ReducedParams reduce_params(const PhysicalParams& p);

/// xi(s) = xi0 - zeta s
double doppler_detuning(double xi0, double s, int zeta);

/// Reduced detuning tau_a (Delta - k p / M) seen at momentum p.
double reduced_detuning_at(const PhysicalParams& phys, const ReducedParams& red, double p);

/// Scalarized generators for one momentum eigenvalue.
struct OdeGenerators {
  Complex p_gen;    // P = i s xi0 / 2
  Complex r_gen;    // R = i s omega_tilde / 2
  Complex qp_comm;  // [Q,P] = i zeta s^2 / 2
};

OdeGenerators ode_generators(double xi0, double omega_tilde, double s, int zeta);

/// One reduced point of the flow equation.
struct ReducedPoint {
  double xi0 = 0.0;
  double omega_tilde = 0.0;
  double s = 0.0;
  int zeta = 0;
};

/// Express a point with gravity coupling g (commutator i g zeta s^2/2) in the
/// units where the coupling is one: s -> s sqrt(g), xi0 -> xi0/sqrt(g),
/// omega -> omega/sqrt(g). zeta == 0 points are returned unchanged.
ReducedPoint rescale_gravity(const ReducedPoint& pt, double g);

}  // namespace gravrabi
