#pragma once

#include <gravrabi/params.hpp>
#include <gravrabi/types.hpp>

#include <string>
#include <vector>

// Independent routes to W: integrating the flow equation and the Taylor
// recursion in eps. Neither uses special functions.

namespace gravrabi::oracle {

struct IntegratorConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  int max_steps = 100000;
  /// 5: Dormand-Prince 5(4). 3: Bogacki-Shampine 3(2).
  int method_order = 5;
};

struct OdeResult {
  Matrix2C w;
  int steps = 0;
  int rejected = 0;
  double worst_local_error = 0.0;  // largest scaled error estimate of an accepted step
};

/// dW/dlambda = (B - lambda [Q,P] sigma3) W on [0, 1], W(0) = I.
/// Throws StepLimitError when max_steps is exhausted.
OdeResult ode_solve(double xi0, double omega_tilde, double s, int zeta,
                    const IntegratorConfig& cfg = {});
Matrix2C ode_w(double xi0, double omega_tilde, double s, int zeta,
               const IntegratorConfig& cfg = {});

/// Same scheme with a fixed number of equal steps (for convergence-order studies).
Matrix2C ode_w_fixed(double xi0, double omega_tilde, double s, int zeta, int steps,
                     int method_order = 5);

struct TaylorState {
  std::vector<Complex> x_coeffs;  // X_n(y0), n = 0..order
  std::vector<Complex> y_coeffs;  // Y_n(y0)
  Complex eps{0.0, 0.0};          // sqrt(2 [Q,P]) = s sqrt(i zeta)
  Complex y0{0.0, 0.0};           // -i xi0 / sqrt(i zeta); NaN when zeta == 0
  int order = 0;
};

struct TaylorResult {
  Matrix2C w;
  TaylorState minus;  // order theta - 1/2 chain (W11, W12)
  TaylorState plus;   // order theta + 1/2 chain (W21, W22)
  std::vector<std::string> warnings;
};

inline constexpr int kMaxTaylorOrder = 40;

/// Truncated Taylor series of W in eps = y1 - y0. max_eps2_power >= 0 keeps
/// only terms up to (eps^2)^k, i.e. up to order k in k.a; -1 keeps all.
TaylorResult taylor_expand(double xi0, double omega_tilde, double s, int zeta, int order,
                           int max_eps2_power = -1);
Matrix2C taylor_w(double xi0, double omega_tilde, double s, int zeta, int order);

}  // namespace gravrabi::oracle
