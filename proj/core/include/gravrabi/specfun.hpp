#pragma once

#include <gravrabi/types.hpp>

// Complex gamma, Kummer 1F1 and the parabolic cylinder pair U, V.
//
// Internally everything runs in binary128; results are rounded to double
// together with an estimate of the relative error of the rounded value.

namespace gravrabi::specfun {

enum class BranchNote { principal, reflected };

enum class Method { series, asymptotic, recessive_asymptotic };

struct SpecFunResult {
  Complex value;
  double est_rel_error = 0.0;
  BranchNote branch_note = BranchNote::principal;
  Method method = Method::series;
};

struct KummerOptions {
  /// |z| at and above which the large-argument expansion is used.
  double switch_radius = 38.0;
  /// Relative truncation tolerance of the power series.
  double rel_tol = 1e-32;
  int max_terms = 5000;
};

/// ln Gamma(z) on the principal branch (cut along the negative real axis).
/// Throws PoleError at nonpositive integers.
Complex complex_ln_gamma(Complex z);

/// Gamma(z); throws PoleError at nonpositive integers.
Complex complex_gamma(Complex z);

/// 1/Gamma(z), zero at the poles of Gamma.
Complex complex_rgamma(Complex z);

/// 1F1(a; b; z). Power series below the switch radius, large-|z| expansion
/// above it. branch_note is `reflected` when the lower sign of the
/// e^{+-i pi a} factor was taken (Im z < 0).
SpecFunResult kummer_1f1(Complex a, Complex b, Complex z, const KummerOptions& opt = {});

/// Force one branch; used to check that both agree where they overlap.
SpecFunResult kummer_1f1_series(Complex a, Complex b, Complex z, const KummerOptions& opt = {});
SpecFunResult kummer_1f1_asymptotic(Complex a, Complex b, Complex z, const KummerOptions& opt = {});

/// Weber function U(alpha, y), built from two 1F1 evaluations.
SpecFunResult pcf_u(Complex alpha, Complex y);

/// V(alpha, y) = Gamma(alpha+1/2)/pi [sin(pi alpha) U(alpha,y) + U(alpha,-y)].
/// Throws PoleError if alpha + 1/2 is a nonpositive integer.
SpecFunResult pcf_v(Complex alpha, Complex y);

/// dU/dy and dV/dy obtained by differentiating the 1F1 representation.
SpecFunResult pcf_u_prime(Complex alpha, Complex y);
SpecFunResult pcf_v_prime(Complex alpha, Complex y);

/// |U V' - U' V - sqrt(2/pi)| with the derivatives taken from the
/// order-raising recurrences.
double pcf_wronskian_residual(Complex alpha, Complex y);

}  // namespace gravrabi::specfun
