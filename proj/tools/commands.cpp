#include "commands.hpp"

#include <gravrabi/approx.hpp>
#include <gravrabi/errors.hpp>
#include <gravrabi/exact.hpp>
#include <gravrabi/oracle.hpp>
#include <gravrabi/scenario.hpp>

#include <charconv>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>
#include <vector>

namespace gravrabi::cli {

std::string csv_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  const auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, r.ptr);
}

namespace {

std::vector<double> linspace(double a, double b, int n) {
  if (n == 1) return {a};
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1);
  return v;
}

template <class... T>
void row(std::ostream& os, double first, T... rest) {
  os << csv_number(first);
  ((os << ',' << csv_number(rest)), ...);
  os << '\n';
}

}  // namespace

int cmd_validate(const ValidateOptions& opt, std::ostream& out, std::ostream& err) {
  if (opt.grid < 0 || opt.grid == 1 || opt.grid > 200) {
    err << "validate: --grid must be 0 or between 2 and 200\n";
    return 1;
  }
  if (opt.zeta && *opt.zeta != 1 && *opt.zeta != -1) {
    err << "validate: --zeta must be +1 or -1\n";
    return 1;
  }
  if ((opt.omega && !(*opt.omega >= 0)) || (opt.s && !(*opt.s >= 0))) {
    err << "validate: --omega and --s must be >= 0\n";
    return 1;
  }
  std::vector<double> xs{-5, -2, -0.5, 0, 0.5, 2, 5}, os{0, 0.5, 1, 2, 4}, ss{0, 0.5, 1, 2, 4, 8};
  if (opt.grid > 0) {
    xs = linspace(-5, 5, opt.grid);
    os = linspace(0, 4, opt.grid);
    ss = linspace(0, 8, opt.grid);
  }
  if (opt.xi0) xs = {*opt.xi0};
  if (opt.omega) os = {*opt.omega};
  if (opt.s) ss = {*opt.s};
  std::vector<int> zs{-1, 1};
  if (opt.zeta) zs = {*opt.zeta};

  oracle::IntegratorConfig cfg;
  cfg.rel_tol = 1e-12;
  cfg.abs_tol = 1e-14;
  std::ostringstream csv;
  csv << "xi0,omega_tilde,s,zeta,max_elem_err,unitarity_err,det_err\n";
  bool ok = true;
  try {
    for (int z : zs)
      for (double o : os) {
        const exact::WEvaluator ev(o, z);
        for (double x : xs)
          for (double s : ss) {
            const Matrix2C w = ev(x, s).w;
            const double e = max_abs_diff(w, oracle::ode_w(x, o, s, z, cfg));
            const double u = unitarity_error(w), d = det_error(w);
            ok = ok && e <= opt.max_elem_err && u <= opt.max_unitarity_err &&
                 d <= opt.max_det_err;
            row(csv, x, o, s, static_cast<double>(z), e, u, d);
          }
      }
  } catch (const Error& e) {
    err << "validate: " << e.what() << '\n';
    return 2;
  }
  out << csv.str();
  if (!ok) {
    err << "validate: threshold violated\n";
    return 2;
  }
  return 0;
}

int cmd_evolve(const std::string& config_path, std::ostream& out, std::ostream& err) {
  sim::Scenario sc;
  try {
    sc = sim::load_scenario(config_path);
  } catch (const ConfigError& e) {
    err << e.what() << " [key: " << e.key() << "]\n";
    return 1;
  }
  std::ostringstream csv;
  csv << "t_s,prob_excited,mean_p,norm\n";
  try {
    for (const auto& r : sim::time_series(sc)) row(csv, r.t, r.prob_excited, r.mean_p, r.norm);
  } catch (const Error& e) {
    err << "evolve: " << e.what() << '\n';
    return 2;
  }
  out << csv.str();
  return 0;
}

int cmd_magnus(const MagnusOptions& opt, std::ostream& out, std::ostream& err) {
  if (!(opt.ds > 0) || !(opt.s_min >= 0) || !(opt.s_max >= opt.s_min) || !(opt.omega >= 0) ||
      !std::isfinite(opt.xi0) || !std::isfinite(opt.s_max)) {
    err << "magnus: need omega >= 0, 0 <= s-min <= s-max and ds > 0\n";
    return 1;
  }
  if (opt.zeta < -1 || opt.zeta > 1) {
    err << "magnus: --zeta must be -1, 0 or 1\n";
    return 1;
  }
  if (!(opt.gravity_scale > 0) || opt.gravity_scale > 1) {
    err << "magnus: --gravity-scale must be in (0, 1]\n";
    return 1;
  }
  const double span = (opt.s_max - opt.s_min) / opt.ds;
  if (span > 1e6) {
    err << "magnus: too many samples\n";
    return 1;
  }
  const int n = static_cast<int>(std::floor(span + 1e-9));
  const double what = std::abs(approx::rabi_frequency(opt.xi0, opt.omega).omega_hat);
  oracle::IntegratorConfig cfg;
  cfg.rel_tol = 1e-13;
  cfg.abs_tol = 1e-15;
  cfg.max_steps = 1000000;

  std::ostringstream csv;
  csv << "s,err_magnus,err_weak_gravity,nearest_pole\n";
  try {
    for (int i = 0; i <= n; ++i) {
      const double s = opt.s_min + i * opt.ds;
      const ReducedPoint pt =
          rescale_gravity({opt.xi0, opt.omega, s, opt.zeta}, opt.gravity_scale);
      Matrix2C ref;
      if (pt.zeta == 0) {
        ref = approx::rabi_w(pt.xi0, pt.omega_tilde, pt.s);
      } else {
        const exact::WEvaluation ev = exact::w_matrix_checked(pt.xi0, pt.omega_tilde, pt.s, pt.zeta);
        ref = ev.abs_error_estimate <= 1e-10
                  ? ev.w
                  : oracle::ode_w(pt.xi0, pt.omega_tilde, pt.s, pt.zeta, cfg);
      }
      const approx::MagnusExponent f = approx::magnus_f(1.0, pt.xi0, pt.omega_tilde, pt.s, pt.zeta);
      if (f.singular) {
        err << "magnus: s = " << csv_number(s) << " lies on a singular point of the exponent\n";
        return 2;
      }
      const double em = max_abs_diff(approx::magnus_w(f), ref);
      const double ew =
          max_abs_diff(approx::weak_gravity_w(pt.xi0, pt.omega_tilde, pt.s, pt.zeta), ref);
      const double two_pi = 2.0 * M_PI;
      const double pole = what > 0 ? two_pi / what * std::max(1.0, std::round(s * what / two_pi))
                                   : std::numeric_limits<double>::quiet_NaN();
      row(csv, s, em, ew, pole);
    }
  } catch (const Error& e) {
    err << "magnus: " << e.what() << '\n';
    return 2;
  }
  out << csv.str();
  return 0;
}

}  // namespace gravrabi::cli
