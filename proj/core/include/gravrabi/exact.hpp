#pragma once

#include <gravrabi/params.hpp>
#include <gravrabi/types.hpp>

#include <memory>

// Exact internal evolution W of the flow equation and the full U(t) blocks.

namespace gravrabi::exact {

struct WEvaluation {
  Matrix2C w;
  /// Bound on max |w_ij - exact| from the special-function error estimates.
  double abs_error_estimate = 0.0;
};

/// Evaluates W for one (omega_tilde, zeta) pair at many (xi0, s); the
/// order-dependent special-function data is built once.
class WEvaluator {
 public:
  WEvaluator(double omega_tilde, int zeta);
  ~WEvaluator();
  WEvaluator(WEvaluator&&) noexcept;
  WEvaluator& operator=(WEvaluator&&) noexcept;

  WEvaluation operator()(double xi0, double s) const;

  double omega_tilde() const { return omega_tilde_; }
  int zeta() const { return zeta_; }

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  double omega_tilde_;
  int zeta_;
};

/// Requires zeta != 0 and s >= 0.
WEvaluation w_matrix_checked(double xi0, double omega_tilde, double s, int zeta);
Matrix2C w_matrix(double xi0, double omega_tilde, double s, int zeta);

/// Facade valid for every zeta: zeta == 0 goes to the Rabi closed form.
Matrix2C internal_evolution(double xi0, double omega_tilde, double s, int zeta);

struct MomentumKick {
  double up = 0.0;    // +hbar k: ground at p - hbar k feeds excited at p
  double down = 0.0;  // -hbar k: excited at p + hbar k feeds ground at p
  Complex laser_phase_up{1.0, 0.0};    // e^{-i phi}, multiplies W12
  Complex laser_phase_down{1.0, 0.0};  // e^{+i phi}, multiplies W21
};

/// U(t) restricted to final momentum p, before the centre-of-mass factor.
///   psi_e(p) <- G d_e [W11^- psi_e(p) + e^{-i phi} W12^- psi_g(p - hbar k)]
///   psi_g(p) <- G d_g [e^{i phi} W21^+ psi_e(p + hbar k) + W22^+ psi_g(p)]
/// with W^- = W at p - hbar k/2 and W^+ = W at p + hbar k/2.
struct UBlocks {
  Matrix2C w_shift_minus;
  Matrix2C w_shift_plus;
  ComplexPair diag_phase;  // (d_e, d_g)
  MomentumKick kick;
  Complex global_phase{1.0, 0.0};

  /// The four coefficients above as one matrix (rows e, g; columns e, g).
  Matrix2C assembled() const;
};

UBlocks evolution_blocks(double p, double t, const PhysicalParams& phys);

/// Internal part of the laser-off evolution, diag(e^{-i E_e t/hbar}, e^{-i E_g t/hbar})
/// with complex energies; the centre-of-mass factor is applied separately.
Matrix2C free_fall_operator(double p, double t, const PhysicalParams& phys);

/// Diagonal phases and global phase of U(t) at momentum p.
struct PhaseFactors {
  ComplexPair diag;
  Complex global;
};
PhaseFactors phase_factors(double p, double t, const PhysicalParams& phys,
                           const ReducedParams& red);

}  // namespace gravrabi::exact
