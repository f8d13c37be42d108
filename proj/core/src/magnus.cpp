#include <gravrabi/approx.hpp>

#include <gravrabi/errors.hpp>

#include <cmath>

namespace gravrabi::approx {

namespace {

// h(x) = (x/(e^x - 1) - 1 + x/2) / x^2 = sum_{k>=1} B_2k x^(2k-2) / (2k)!
Complex bracket_over_x2(Complex x) {
  if (std::abs(x) < 0.1) {
    const Complex x2 = x * x;
    return 1.0 / 12.0 +
           x2 * (-1.0 / 720.0 + x2 * (1.0 / 30240.0 + x2 * (-1.0 / 1209600.0 +
                                                             x2 * (1.0 / 47900160.0))));
  }
  return (x / (std::exp(x) - 1.0) - 1.0 + 0.5 * x) / (x * x);
}

Complex sinhc(Complex k) {
  if (std::abs(k) < 1e-4) return 1.0 + k * k / 6.0;
  return std::sinh(k) / k;
}

}  // namespace

Matrix2C MagnusExponent::matrix() const {
  const Complex p = generators.p_gen, r = generators.r_gen;
  const Complex f11 = coeff_B * p + coeff_sigma3;
  const Complex f12 = coeff_B * r + 2.0 * coeff_R1 * r;
  const Complex f21 = coeff_B * r - 2.0 * coeff_R1 * r;
  return {f11, f12, f21, -f11};
}

MagnusExponent magnus_f(double lambda, double xi0, double omega_tilde, double s, int zeta) {
  MagnusExponent f;
  f.generators = ode_generators(xi0, omega_tilde, s, zeta);
  const double w = std::hypot(omega_tilde, xi0);
  f.phase = w * s * lambda;
  const double n = std::round(f.phase / (2.0 * M_PI));
  if (n >= 1 && std::abs(f.phase - 2.0 * M_PI * n) < kMagnusPoleTolerance) {
    f.singular = true;
    return f;
  }
  const Complex c = f.generators.qp_comm;
  f.coeff_B = lambda;
  f.coeff_sigma3 = -0.5 * lambda * lambda * c;
  // c lambda/(s^2 w^2) * bracket(x) with x = i s w lambda, i.e. -c lambda^3 h(x)
  f.coeff_R1 = -c * lambda * lambda * lambda * bracket_over_x2(Complex(0.0, f.phase));
  return f;
}

Matrix2C magnus_w(const MagnusExponent& f) {
  if (f.singular)
    throw SingularExponentError("magnus_w: exponent is singular (omega_hat s lambda = 2 pi N)");
  const Matrix2C m = f.matrix();
  // traceless: F^2 = kappa^2 I
  const Complex kappa = std::sqrt(m.w11 * m.w11 + m.w12 * m.w21);
  const Complex ch = std::cosh(kappa), sh = sinhc(kappa);
  return {ch + sh * m.w11, sh * m.w12, sh * m.w21, ch + sh * m.w22};
}

std::vector<double> magnus_singularities(double xi0, double omega_tilde, double s_max) {
  if (!(s_max > 0)) throw DomainError("magnus_singularities: s_max must be > 0");
  std::vector<double> out;
  const double w = std::hypot(omega_tilde, xi0);
  if (w == 0.0) return out;
  for (int n = 1;; ++n) {
    const double s = 2.0 * M_PI * n / w;
    if (s > s_max) break;
    out.push_back(s);
  }
  return out;
}

Rational magnus_recursion_residual(int n, const std::vector<Rational>& b) {
  if (n < 2 || static_cast<std::size_t>(n) >= b.size())
    throw DomainError("magnus_recursion_residual: need 2 <= n < b.size()");
  Rational acc = Rational(n + 2) * b[n] - Rational(1, 2);
  for (int l = 0; l <= n - 2; ++l) {
    boost::multiprecision::cpp_int binom = 1;  // C(n+1, l+2)
    for (int j = 0; j < l + 2; ++j) binom = binom * (n + 1 - j) / (j + 1);
    acc += Rational(binom) * b[n - l - 1];
  }
  return acc;
}

}  // namespace gravrabi::approx
