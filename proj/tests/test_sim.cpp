#include <doctest.h>

#include <gravrabi/errors.hpp>
#include <gravrabi/exact.hpp>
#include <gravrabi/scenario.hpp>
#include <gravrabi/sim.hpp>

#include <sstream>

#include "check.hpp"

using namespace gravrabi;
using namespace gravrabi::sim;

namespace {

constexpr double kMass = 1.443e-25, kWave = 8.05e6, kBohr = 2.5461e-19;
const double kHk = kHbar * kWave;

// Rb-like atom; omega_tilde and xi0 are reduced values seen by the pair (p0, p0 + hbar k).
PhysicalParams atom(double omega_tilde, double xi0, double accel, double p0 = 0.0,
                    double bohr = kBohr) {
  PhysicalParams p;
  p.energy_excited = bohr;
  p.mass = kMass;
  p.wave_number = kWave;
  p.accel = accel;
  const double ka = kWave * accel;
  const double tau = ka != 0 ? 1 / std::sqrt(std::abs(ka)) : 1e-4;
  p.rabi = omega_tilde / tau;
  const double q = p0 + kHk / 2;
  p.laser_freq = bohr / kHbar + xi0 / tau + kWave * q / kMass;
  return p;
}

double tau_a() { return 1 / std::sqrt(kWave * 9.81); }

MomentumGrid grid_for(double p0, double extra_hk = 0.0, int steps = 800) {
  return commensurate_grid(kHk, steps, p0 - 3 * kHk, p0 + (3 + extra_hk) * kHk, p0);
}

}  // namespace

TEST_CASE("commensurate_grid") {
  const MomentumGrid g = grid_for(0.3 * kHk);
  CHECK(g.spacing == doctest::Approx(kHk / 800).epsilon(1e-15));
  CHECK(g.steps_per_hbar_k == 800);
  CHECK(g.p_min <= -2.7 * kHk + 1e-9 * g.spacing);
  CHECK(g.p_max >= 3.3 * kHk - 1e-9 * g.spacing);
  bool anchored = false;
  for (int j = 0; j < g.n_points; ++j) anchored |= std::abs(g.p(j) - 0.3 * kHk) < 1e-9 * g.spacing;
  CHECK(anchored);
  CHECK_THROWS_AS(commensurate_grid(kHk, 0, -1, 1, 0), GridError);
  CHECK_THROWS_AS(commensurate_grid(kHk, 10, 1, -1, 0), GridError);
}

TEST_CASE("gaussian_packet") {
  const MomentumGrid g = grid_for(0);
  const double sigma = 0.02 * kHk;
  const SpinorPacket a = gaussian_packet(g, 0.1 * kHk, sigma);
  CHECK(std::abs(a.norm() - 1) < 1e-12);
  CHECK(std::abs(expectation_momentum(a) - 0.1 * kHk) < g.spacing);
  CHECK(excitation_probability(a) == 0.0);
  CHECK(a.time == 0.0);
  const SpinorPacket b = gaussian_packet(g, 0.1 * kHk, sigma / 2);
  auto peak = [](const SpinorPacket& p) {
    double m = 0;
    for (auto v : p.amp_g) m = std::max(m, std::abs(v));
    return m;
  };
  CHECK(peak(b) / peak(a) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-6));
  CHECK_THROWS_AS(gaussian_packet(g, 2.95 * kHk, sigma), GridError);
  CHECK_THROWS_AS(gaussian_packet(g, 0, -1), GridError);
}

TEST_CASE("evolve_packet: t = 0 and preconditions") {
  const PhysicalParams p = atom(1, 0, 9.81);
  const SpinorPacket pkt = gaussian_packet(grid_for(0), 0, 0.01 * kHk);
  const SpinorPacket same = evolve_packet(pkt, p, 0.0);
  CHECK(same.amp_g == pkt.amp_g);
  CHECK(same.amp_e == pkt.amp_e);
  SpinorPacket later = pkt;
  later.time = 1e-5;
  CHECK_THROWS_AS(evolve_packet(later, p, 1e-5), PreconditionError);
  CHECK_THROWS_AS(evolve_packet(pkt, p, -1e-5), PreconditionError);
  // M a t must be a whole number of grid steps
  const double t = snap_time(pkt.grid, p, 1e-4) + 0.4 * pkt.grid.spacing / (kMass * 9.81);
  CHECK_THROWS_AS(evolve_packet(pkt, p, t), GridError);
  MomentumGrid wrong = pkt.grid;
  wrong.steps_per_hbar_k = 799;
  SpinorPacket w = pkt;
  w.grid = wrong;
  CHECK_THROWS_AS(evolve_packet(w, p, snap_time(pkt.grid, p, 1e-4)), GridError);
}

TEST_CASE("evolve_packet: free fall without laser") {
  const PhysicalParams p = atom(0, 0, 9.81);
  const MomentumGrid g = grid_for(0, 2.0);
  const SpinorPacket pkt = gaussian_packet(g, 0, 0.01 * kHk);
  for (double t0 : {1e-4, 5e-4, 1e-3}) {
    const double t = snap_time(g, p, t0);
    const SpinorPacket out = evolve_packet(pkt, p, t);
    CAPTURE(t);
    CHECK(excitation_probability(out) == 0.0);
    CHECK(std::abs(out.norm() - 1) < 1e-9);
    CHECK(std::abs(expectation_momentum(out) - kMass * 9.81 * t) < 1e-6 * kHk);
  }
}

TEST_CASE("evolve_packet: narrow packet follows the pointwise matrix") {
  const PhysicalParams p = atom(1.0, 0.3, 9.81);
  const ReducedParams r = reduce_params(p);
  const MomentumGrid g = grid_for(0, 1.0, 4000);
  const SpinorPacket pkt = gaussian_packet(g, 0, 0.0005 * kHk);
  for (double s : {1.0, 2.5, 4.0}) {
    const double t = snap_time(g, p, s * r.tau_a);
    const SpinorPacket out = evolve_packet(pkt, p, t);
    const double xi = reduced_detuning_at(p, r, kHk / 2);
    const Matrix2C w = exact::w_matrix(xi, r.omega_tilde, t / r.tau_a, r.zeta);
    CAPTURE(s);
    CHECK(std::abs(excitation_probability(out) - std::norm(w.w12)) < 1e-4);
    CHECK(std::abs(out.norm() - 1) < 1e-9);
  }
}

TEST_CASE("evolve_packet: resonant pi pulse without gravity") {
  const double om = 8000.0;
  PhysicalParams p = atom(0, 0, 0);
  p.rabi = om;
  const double q = kHk / 2;
  p.laser_freq = kBohr / kHbar + kWave * q / kMass;  // resonant for the pair at the centre
  const MomentumGrid g = grid_for(0);
  const SpinorPacket pkt = gaussian_packet(g, 0, 0.002 * kHk);
  const SpinorPacket out = evolve_packet(pkt, p, M_PI / om);
  const double prob = excitation_probability(out);
  CHECK(prob < 1.0 + 1e-12);
  CHECK(prob > 0.999);
  CHECK(std::abs(out.norm() - 1) < 1e-9);
  // momentum of the excited component is one photon higher
  double ne = 0, pe = 0;
  for (int j = 0; j < g.n_points; ++j) {
    ne += std::norm(out.amp_e[j]);
    pe += std::norm(out.amp_e[j]) * g.p(j);
  }
  CHECK(pe / ne == doctest::Approx(kHk).epsilon(1e-3));
}

TEST_CASE("evolve_packet: centre-of-mass factor leaves probabilities alone") {
  const PhysicalParams p = atom(1.3, -0.4, 9.81);
  const MomentumGrid g = grid_for(0, 1.0);
  const SpinorPacket pkt = gaussian_packet(g, 0, 0.01 * kHk);
  const double t = snap_time(g, p, 3 * tau_a());
  EvolveOptions with, without;
  without.apply_cm_phase = false;
  const SpinorPacket a = evolve_packet(pkt, p, t, with), b = evolve_packet(pkt, p, t, without);
  CHECK(std::abs(excitation_probability(a) - excitation_probability(b)) < 1e-12);
  CHECK(std::abs(a.norm() - b.norm()) < 1e-12);
  CHECK(expectation_momentum(a) - expectation_momentum(b) ==
        doctest::Approx(kMass * 9.81 * t).epsilon(1e-9));
}

TEST_CASE("cm_phase pieces") {
  const PhysicalParams p = atom(1, 0, 9.81);
  const MomentumGrid g = grid_for(0, 1.0);
  const double t = snap_time(g, p, 2e-4);
  const CmPhase cm = cm_phase(g, p, t);
  CHECK(cm.shift_momentum == doctest::Approx(kMass * 9.81 * t));
  CHECK(cm.shift_steps == static_cast<int>(std::lround(kMass * 9.81 * t / g.spacing)));
  CHECK(cm.cnumber == doctest::Approx(t * t * t * kMass * 9.81 * 9.81 / (3 * kHbar)));
  const int j = g.n_points / 3;
  const double pj = g.p(j);
  CHECK(std::abs(cm.kinetic[j] - std::polar(1.0, -t * pj * pj / (2 * kMass * kHbar))) < 1e-9);
  CHECK(std::abs(cm.drift[j] - std::polar(1.0, t * t * 9.81 * pj / (2 * kHbar))) < 1e-9);
}

TEST_CASE("evolve_packet: thread count does not change the result") {
  const PhysicalParams p = atom(1.0, 0.2, 9.81);
  const MomentumGrid g = grid_for(0, 1.0);
  const SpinorPacket pkt = gaussian_packet(g, 0, 0.01 * kHk);
  const double t = snap_time(g, p, 2 * tau_a());
  EvolveOptions one, many;
  one.threads = 1;
  many.threads = 4;
  const SpinorPacket a = evolve_packet(pkt, p, t, one), b = evolve_packet(pkt, p, t, many);
  CHECK(a.amp_e == b.amp_e);
  CHECK(a.amp_g == b.amp_g);
}

TEST_CASE("evolve_packet: mass leaving the grid is an error") {
  const PhysicalParams p = atom(0, 0, 9.81);
  const MomentumGrid g = commensurate_grid(kHk, 200, -0.5 * kHk, 0.5 * kHk, 0);
  const SpinorPacket pkt = gaussian_packet(g, 0, 0.05 * kHk);
  CHECK_THROWS_AS(evolve_packet(pkt, p, snap_time(g, p, 5 * tau_a())), GridError);
}

TEST_CASE("evolve_packet: decay removes norm") {
  PhysicalParams p = atom(1.0, 0.0, 9.81);
  p.gamma_excited = 500;
  const MomentumGrid g = grid_for(0, 1.0);
  const SpinorPacket pkt = gaussian_packet(g, 0, 0.01 * kHk);
  const SpinorPacket out = evolve_packet(pkt, p, snap_time(g, p, 4 * tau_a()));
  CHECK(out.norm() < 1 - 1e-3);
  CHECK(out.norm() > 0.5);
}

TEST_CASE("Galilean bookkeeping") {
  // A boost p0 -> p0 + dp together with a matching laser detuning leaves
  // internal probabilities unchanged, with or without gravity. A small Bohr
  // frequency keeps laser_freq exactly representable at the 1e-12 level.
  const double bohr = kHbar * 3e6;
  for (double accel : {9.81, 0.0}) {
    const double dp = 7.25 * kHk;
    PhysicalParams a = atom(1.2, 0.4, accel, 0, bohr), b = atom(1.2, 0.4, accel, dp, bohr);
    if (accel == 0) {
      a.rabi = b.rabi = 9000;
    }
    const SpinorPacket pa = gaussian_packet(grid_for(0), 0, 0.01 * kHk);
    const SpinorPacket pb = gaussian_packet(grid_for(dp), dp, 0.01 * kHk);
    const double t = snap_time(pa.grid, a, 2.5 * tau_a());
    CAPTURE(accel);
    CHECK(std::abs(excitation_probability(evolve_packet(pa, a, t)) -
                   excitation_probability(evolve_packet(pb, b, t))) < 1e-12);
  }
  // Over a short interval the falling atom and a free atom with the same
  // instantaneous detuning agree.
  const PhysicalParams fall = atom(1.2, 0.4, 9.81);
  PhysicalParams still = fall;
  still.accel = 0;
  const MomentumGrid g = grid_for(0);
  const SpinorPacket pkt = gaussian_packet(g, 0, 0.005 * kHk);
  double worst = 0;
  for (int i = 1; i <= 5; ++i) {
    const double t = snap_time(g, fall, 0.006 * i * tau_a());
    worst = std::max(worst, std::abs(excitation_probability(evolve_packet(pkt, fall, t)) -
                                     excitation_probability(evolve_packet(pkt, still, t))));
  }
  CHECK(worst < 1e-3);
}

TEST_CASE("Rabi contrast fades for a resonant falling atom") {
  // narrow-packet limit: pointwise probability at xi0 = 0
  const exact::WEvaluator ev(1.0, 1);
  std::vector<double> s, prob;
  for (double x = 0; x <= 30; x += 0.01) {
    s.push_back(x);
    prob.push_back(std::norm(ev(0.0, x).w.w12));
  }
  std::vector<double> maxima, minima;
  for (std::size_t i = 1; i + 1 < prob.size(); ++i) {
    if (s[i] < 3) continue;
    if (prob[i] > prob[i - 1] && prob[i] >= prob[i + 1]) maxima.push_back(prob[i]);
    if (prob[i] < prob[i - 1] && prob[i] <= prob[i + 1]) minima.push_back(prob[i]);
  }
  const std::size_t n = std::min(maxima.size(), minima.size());
  REQUIRE(n >= 5);
  for (std::size_t k = 1; k < n; ++k) {
    const double c0 = maxima[k - 1] - minima[k - 1], c1 = maxima[k] - minima[k];
    CAPTURE(k);
    CHECK(c1 <= c0 * 1.05);
  }
  CHECK(maxima[n - 1] - minima[n - 1] < 0.5 * (maxima[0] - minima[0]));
}

TEST_CASE("time_series") {
  std::istringstream cfg(R"(
energy_excited_J = 2.5461e-19
mass_kg = 1.443e-25
wave_number_per_m = 8.05e6
accel_m_s2 = 9.81
omega_tilde = 1
xi0 = 0
sigma_p_hbar_k = 0.005
times_tau_a = 0, 5, 50, 60, 70
)");
  const Scenario sc = parse_scenario(cfg);
  const std::vector<SeriesRow> rows = time_series(sc);
  REQUIRE(rows.size() == 5);
  CHECK(rows[0].prob_excited == 0.0);
  const double target = (1 - std::exp(-M_PI / 4)) / 2;
  for (const auto& r : rows) CHECK(std::abs(r.norm - 1) < 1e-9);
  for (std::size_t i = 2; i < rows.size(); ++i) CHECK(std::abs(rows[i].prob_excited - target) < 1e-2);
  Scenario bad = sc;
  bad.times = {2e-4, 1e-4};
  CHECK_THROWS_AS(time_series(bad), PreconditionError);
  Scenario off = sc;
  off.phys.rabi = 0;
  for (const auto& r : time_series(off)) CHECK(r.prob_excited == 0.0);
}

TEST_CASE("parse_scenario: keys and errors") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return parse_scenario(in);
  };
  const std::string base =
      "energy_excited_J = 2.5461e-19\nmass_kg = 1.443e-25\nwave_number_per_m = 8.05e6\n"
      "sigma_p_hbar_k = 0.01\n";
  const Scenario sc = parse(base + "accel_m_s2 = 9.81\nomega_tilde = 2\nxi0 = 0.5\ntimes_s = 0, 1e-4\n");
  const ReducedParams r = reduce_params(sc.phys);
  CHECK(r.omega_tilde == doctest::Approx(2).epsilon(1e-12));
  // xi0 is honoured up to the representability of laser_freq in double
  const double lf = sc.phys.laser_freq;
  const double ulp_xi = (std::nextafter(lf, 2 * lf) - lf) * r.tau_a;
  CHECK(std::abs(reduced_detuning_at(sc.phys, r, kHk / 2) - 0.5) <= 2 * ulp_xi);
  CHECK(sc.times.size() == 2);
  CHECK(sc.snap_times);
  auto key_of = [&](const std::string& text) {
    try {
      parse(text);
    } catch (const ConfigError& e) {
      return e.key();
    }
    return std::string("<none>");
  };
  CHECK(key_of(base + "times_s = 0\ncolour = red\n") == "colour");
  CHECK(key_of(base + "times_s = 0\nmass_kg = 1\n") == "mass_kg");
  CHECK(key_of(base + "times_s = 0, x\n") == "times_s");
  CHECK(key_of(base + "times_s = 2, 1\n") == "times_s");
  CHECK(key_of(base) == "times_s");
  CHECK(key_of(base + "times_s = 0\nrabi_rad_s = 1\nomega_tilde = 1\n") == "omega_tilde");
  CHECK(key_of(base + "times_s = 0\nomega_tilde = 1\n") == "omega_tilde");
  CHECK(key_of(base + "times_s = 0\nsnap_times = maybe\n") == "snap_times");
  CHECK(key_of(base + "times_s = 0\ngrid_steps_per_hbar_k = 2.5\n") == "grid_steps_per_hbar_k");
  CHECK(key_of("mass_kg = 1\n") == "wave_number_per_m");
  CHECK_THROWS_AS(load_scenario("/nonexistent/file.cfg"), ConfigError);
}
