#include <gravrabi/oracle.hpp>

#include <gravrabi/errors.hpp>

#include <algorithm>
#include <array>
#include <cmath>

namespace gravrabi::oracle {

namespace {

using State = std::array<Complex, 4>;  // W11, W12, W21, W22

struct Tableau {
  int stages;
  int order;  // order of the propagated solution
  double c[7];
  double a[7][7];
  double b[7];
  double bhat[7];
};

constexpr Tableau kDormandPrince = {
    7,
    5,
    {0.0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0},
    {{},
     {1.0 / 5},
     {3.0 / 40, 9.0 / 40},
     {44.0 / 45, -56.0 / 15, 32.0 / 9},
     {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
     {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
     {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84}},
    {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84, 0.0},
    {5179.0 / 57600, 0.0, 7571.0 / 16695, 393.0 / 640, -92097.0 / 339200, 187.0 / 2100,
     1.0 / 40}};

constexpr Tableau kBogackiShampine = {
    4,
    3,
    {0.0, 1.0 / 2, 3.0 / 4, 1.0},
    {{}, {1.0 / 2}, {0.0, 3.0 / 4}, {2.0 / 9, 1.0 / 3, 4.0 / 9}},
    {2.0 / 9, 1.0 / 3, 4.0 / 9, 0.0},
    {7.0 / 24, 1.0 / 4, 1.0 / 3, 1.0 / 8}};

const Tableau& tableau_for(int order) {
  if (order == 5) return kDormandPrince;
  if (order == 3) return kBogackiShampine;
  throw DomainError("ode_w: method_order must be 3 or 5");
}

struct Flow {
  Complex p, r, c;

  State operator()(double lambda, const State& w) const {
    const Complex d = p - lambda * c;
    return {d * w[0] + r * w[2], d * w[1] + r * w[3], r * w[0] - d * w[2], r * w[1] - d * w[3]};
  }
};

struct Step {
  State y;
  State err;
};

Step rk_step(const Tableau& t, const Flow& f, double lambda, const State& y, double h) {
  std::array<State, 7> k;
  for (int i = 0; i < t.stages; ++i) {
    State yi = y;
    for (int j = 0; j < i; ++j)
      if (t.a[i][j] != 0.0)
        for (int n = 0; n < 4; ++n) yi[n] += h * t.a[i][j] * k[j][n];
    k[i] = f(lambda + t.c[i] * h, yi);
  }
  Step s{y, {}};
  for (int n = 0; n < 4; ++n) {
    Complex hi = 0.0, lo = 0.0;
    for (int i = 0; i < t.stages; ++i) {
      hi += t.b[i] * k[i][n];
      lo += t.bhat[i] * k[i][n];
    }
    s.y[n] += h * hi;
    s.err[n] = h * (hi - lo);
  }
  return s;
}

double error_norm(const Step& s, const State& y, const IntegratorConfig& cfg) {
  double acc = 0.0;
  for (int n = 0; n < 4; ++n) {
    const double parts[2][3] = {{s.err[n].real(), y[n].real(), s.y[n].real()},
                                {s.err[n].imag(), y[n].imag(), s.y[n].imag()}};
    for (const auto& q : parts) {
      const double sc = cfg.abs_tol + cfg.rel_tol * std::max(std::abs(q[1]), std::abs(q[2]));
      acc += (q[0] / sc) * (q[0] / sc);
    }
  }
  return std::sqrt(acc / 8.0);
}

Matrix2C to_matrix(const State& y) { return {y[0], y[1], y[2], y[3]}; }

Flow make_flow(double xi0, double omega_tilde, double s, int zeta) {
  if (!std::isfinite(xi0) || !std::isfinite(omega_tilde) || !std::isfinite(s))
    throw DomainError("ode_w: non-finite argument");
  if (s < 0) throw PreconditionError("ode_w: s must be >= 0");
  const OdeGenerators g = ode_generators(xi0, omega_tilde, s, zeta);
  return {g.p_gen, g.r_gen, g.qp_comm};
}

}  // namespace

OdeResult ode_solve(double xi0, double omega_tilde, double s, int zeta,
                    const IntegratorConfig& cfg) {
  if (!(cfg.rel_tol > 0) || !(cfg.abs_tol > 0))
    throw DomainError("ode_w: tolerances must be > 0");
  const Tableau& t = tableau_for(cfg.method_order);
  const Flow f = make_flow(xi0, omega_tilde, s, zeta);
  const double expo = -1.0 / t.order;

  State y = {1.0, 0.0, 0.0, 1.0};
  OdeResult out;
  const double scale = std::abs(f.p) + std::abs(f.r) + std::abs(f.c);
  double h = scale > 0 ? std::min(1.0, 0.05 / scale) : 1.0;
  double lambda = 0.0;
  double worst_rejected = 0.0;
  while (lambda < 1.0) {
    if (out.steps + out.rejected >= cfg.max_steps)
      throw StepLimitError("ode_w: step limit exceeded",
                           std::max(out.worst_local_error, worst_rejected));
    if (lambda + h > 1.0) h = 1.0 - lambda;
    const Step st = rk_step(t, f, lambda, y, h);
    const double err = error_norm(st, y, cfg);
    if (err <= 1.0) {
      lambda = (h == 1.0 - lambda) ? 1.0 : lambda + h;
      y = st.y;
      ++out.steps;
      out.worst_local_error = std::max(out.worst_local_error, err);
    } else {
      ++out.rejected;
      worst_rejected = std::max(worst_rejected, err);
    }
    const double fac = err == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(err, expo), 0.2, 5.0);
    h *= fac;
  }
  out.w = to_matrix(y);
  return out;
}

Matrix2C ode_w(double xi0, double omega_tilde, double s, int zeta, const IntegratorConfig& cfg) {
  return ode_solve(xi0, omega_tilde, s, zeta, cfg).w;
}

Matrix2C ode_w_fixed(double xi0, double omega_tilde, double s, int zeta, int steps,
                     int method_order) {
  if (steps < 1) throw DomainError("ode_w_fixed: steps must be >= 1");
  const Tableau& t = tableau_for(method_order);
  const Flow f = make_flow(xi0, omega_tilde, s, zeta);
  State y = {1.0, 0.0, 0.0, 1.0};
  const double h = 1.0 / steps;
  for (int i = 0; i < steps; ++i) y = rk_step(t, f, i * h, y, h).y;
  return to_matrix(y);
}

}  // namespace gravrabi::oracle
