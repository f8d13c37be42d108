#pragma once

#include <gravrabi/bernoulli.hpp>
#include <gravrabi/params.hpp>
#include <gravrabi/types.hpp>

#include <string>
#include <utility>
#include <vector>

// Closed-form regimes of the internal evolution matrix W (reduced units).

namespace gravrabi::approx {

/// Soft warnings raised by approximations used outside their regime.
struct Diagnostics {
  std::vector<std::string> warnings;
};

/// Generalized Rabi frequency sqrt(omega^2 + xi0^2) in reduced units.
/// zero_field marks Omega = 0, where the sign of the root is conventionally negative;
/// every formula here is even in omega_hat, so the magnitude is stored.
struct RabiFrequency {
  Complex omega_hat;
  bool zero_field = false;
};

RabiFrequency rabi_frequency(double xi0, double omega_tilde);

/// exp(B) for the gravity-free flow.
Matrix2C rabi_w(double xi0, double omega_tilde, double s);

/// First order in k.a. Warns (through diag) for s > 1.
Matrix2C weak_gravity_w(double xi0, double omega_tilde, double s, int zeta,
                        Diagnostics* diag = nullptr);

/// Late-time form for a detuning that has grown large. Requires
/// |xi(s)| >= 10 and -zeta xi(s) > 0; throws PreconditionError otherwise.
Matrix2C longtime_w(double xi0, double omega_tilde, double s, int zeta);

/// (|W11|, |W12|) for xi0 = 0 at late times.
std::pair<double, double> resonant_asymptotic_amplitudes(double omega_tilde);

/// F(lambda) = cB B + c3 sigma3 + cR R1 with R1 = [sigma3, B], first order in [Q,P].
struct MagnusExponent {
  OdeGenerators generators;
  Complex coeff_B{0.0, 0.0};
  Complex coeff_sigma3{0.0, 0.0};
  Complex coeff_R1{0.0, 0.0};
  bool singular = false;
  double phase = 0.0;  // omega_hat s lambda

  Matrix2C matrix() const;
};

/// Tolerance on |omega_hat s lambda - 2 pi N| below which the exponent is singular.
inline constexpr double kMagnusPoleTolerance = 1e-6;

/// Coefficients are left at zero when the exponent is singular.
MagnusExponent magnus_f(double lambda, double xi0, double omega_tilde, double s, int zeta);

/// exp(F); throws SingularExponentError for singular exponents.
Matrix2C magnus_w(const MagnusExponent& f);

/// All s = 2 pi N / omega_hat <= s_max, ascending.
std::vector<double> magnus_singularities(double xi0, double omega_tilde, double s_max);

/// Left side of the exponent recursion
/// (n+2) b_n - 1/2 + sum_{l=0}^{n-2} C(n+1, l+2) b_{n-l-1} for given b (b[0] unused).
Rational magnus_recursion_residual(int n, const std::vector<Rational>& b);

}  // namespace gravrabi::approx
