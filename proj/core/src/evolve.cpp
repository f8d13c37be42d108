#include <gravrabi/sim.hpp>

#include <gravrabi/errors.hpp>
#include <gravrabi/exact.hpp>

#include <algorithm>
#include <cmath>
#include <optional>
#include <thread>

namespace gravrabi::sim {

namespace {

void check_grid(const MomentumGrid& g, const PhysicalParams& phys) {
  const double hk = kHbar * phys.wave_number;
  if (g.steps_per_hbar_k < 1 || g.n_points < 1)
    throw GridError("evolve_packet: grid has no photon step count");
  const double want = std::abs(hk) / g.steps_per_hbar_k;
  if (std::abs(g.spacing - want) > 1e-12 * want)
    throw GridError("evolve_packet: hbar k is not an integer number of grid steps");
}

}  // namespace

SpinorPacket evolve_packet(const SpinorPacket& pkt, const PhysicalParams& phys, double t,
                           const EvolveOptions& opt) {
  if (!(t >= 0) || !std::isfinite(t)) throw PreconditionError("evolve_packet: t must be >= 0");
  if (pkt.time != 0.0)
    throw PreconditionError("evolve_packet: packet must be prepared at t = 0");
  phys.validate();
  const MomentumGrid& grid = pkt.grid;
  check_grid(grid, phys);
  const int n = grid.n_points;
  if (static_cast<int>(pkt.amp_e.size()) != n || static_cast<int>(pkt.amp_g.size()) != n)
    throw GridError("evolve_packet: amplitude arrays do not match the grid");
  if (t == 0.0) return pkt;

  // Validate the centre-of-mass shift before doing any work.
  std::optional<CmPhase> cm;
  if (opt.apply_cm_phase) cm = cm_phase(grid, phys, t);

  const ReducedParams red = reduce_params(phys);
  const double hk = kHbar * phys.wave_number;
  // Signed number of steps from the ground momentum to the excited one.
  const int m = phys.wave_number > 0 ? grid.steps_per_hbar_k : -grid.steps_per_hbar_k;
  const double s = t / red.tau_a;
  const Complex up = std::exp(Complex(0.0, -phys.phase));
  const Complex down = std::exp(Complex(0.0, phys.phase));
  std::optional<exact::WEvaluator> ev;
  if (red.zeta != 0) ev.emplace(red.omega_tilde, red.zeta);

  SpinorPacket out;
  out.grid = grid;
  out.time = t;
  out.amp_e.assign(n, Complex(0.0));
  out.amp_g.assign(n, Complex(0.0));

  // Pair j couples ground at p_j with excited at p_j + hbar k through one W
  // evaluated at the midpoint.
  const int j_lo = std::min(0, -m), j_hi = std::max(n, n - m);
  const double h = grid.spacing;
  auto work = [&](int a, int b, double& lost) {
    for (int j = a; j < b; ++j) {
      const int je = j + m;
      const bool g_in = j >= 0 && j < n, e_in = je >= 0 && je < n;
      const Complex g = g_in ? pkt.amp_g[j] : Complex(0.0);
      const Complex e = e_in ? pkt.amp_e[je] : Complex(0.0);
      if ((std::norm(g) + std::norm(e)) * h < opt.negligible_probability) continue;
      const double pg = grid.p(j), pe = pg + hk;
      const double q = pg + hk / 2.0;
      const double xi = reduced_detuning_at(phys, red, q);
      const Matrix2C w =
          ev ? (*ev)(xi, s).w : exact::internal_evolution(xi, red.omega_tilde, s, red.zeta);
      const exact::PhaseFactors fe = exact::phase_factors(pe, t, phys, red);
      const exact::PhaseFactors fg = exact::phase_factors(pg, t, phys, red);
      const Complex ne = fe.global * fe.diag.first * (w.w11 * e + up * w.w12 * g);
      const Complex ng = fg.global * fg.diag.second * (down * w.w21 * e + w.w22 * g);
      if (e_in) out.amp_e[je] = ne; else lost += std::norm(ne) * h;
      if (g_in) out.amp_g[j] = ng; else lost += std::norm(ng) * h;
    }
  };

  unsigned nt = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  const int total = j_hi - j_lo;
  nt = std::min<unsigned>(nt, static_cast<unsigned>(std::max(1, total / 64)));
  std::vector<double> lost(nt, 0.0);
  if (nt <= 1) {
    work(j_lo, j_hi, lost[0]);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errs(nt);
    const int chunk = (total + static_cast<int>(nt) - 1) / static_cast<int>(nt);
    for (unsigned i = 0; i < nt; ++i) {
      const int a = j_lo + static_cast<int>(i) * chunk, b = std::min(j_hi, a + chunk);
      pool.emplace_back([&, i, a, b] {
        try {
          work(a, b, lost[i]);
        } catch (...) {
          errs[i] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errs)
      if (e) std::rethrow_exception(e);
  }
  double dropped = 0.0;
  for (double l : lost) dropped += l;
  if (cm) dropped += apply_cm_phase(out, *cm);
  if (dropped > opt.max_lost_probability)
    throw GridError("evolve_packet: probability " + std::to_string(dropped) +
                    " left the momentum grid");
  return out;
}

MomentumGrid scenario_grid(const Scenario& sc) {
  const PhysicalParams& ph = sc.phys;
  const double hk = std::abs(kHbar * ph.wave_number);
  double tmax = 0.0;
  for (double t : sc.times) tmax = std::max(tmax, t);
  const double shift = ph.mass * ph.accel * tmax;
  const double pad = 12.0 * sc.packet.sigma_p + (1.0 + sc.grid.margin_hbar_k) * hk;
  const double lo = sc.packet.p0 - pad + std::min(0.0, shift);
  const double hi = sc.packet.p0 + pad + std::max(0.0, shift);
  return commensurate_grid(hk, sc.grid.steps_per_hbar_k, lo, hi, sc.packet.p0);
}

std::vector<SeriesRow> time_series(const Scenario& sc, const EvolveOptions& opt) {
  for (std::size_t i = 0; i < sc.times.size(); ++i) {
    if (!(sc.times[i] >= 0)) throw PreconditionError("time_series: times must be >= 0");
    if (i > 0 && sc.times[i] < sc.times[i - 1])
      throw PreconditionError("time_series: times must be ascending");
  }
  const MomentumGrid grid = scenario_grid(sc);
  const SpinorPacket start = gaussian_packet(grid, sc.packet.p0, sc.packet.sigma_p);
  std::vector<SeriesRow> rows;
  rows.reserve(sc.times.size());
  for (double t0 : sc.times) {
    const double t = sc.snap_times ? snap_time(grid, sc.phys, t0) : t0;
    const SpinorPacket p = evolve_packet(start, sc.phys, t, opt);
    rows.push_back({t, excitation_probability(p), expectation_momentum(p), p.norm()});
  }
  return rows;
}

}  // namespace gravrabi::sim
