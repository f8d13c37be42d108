#include <gravrabi/sim.hpp>

#include <gravrabi/errors.hpp>

#include <cmath>
#include <string>

namespace gravrabi::sim {

MomentumGrid commensurate_grid(double hbar_k, int steps_per_hbar_k, double p_lo, double p_hi,
                               double p_anchor) {
  if (!(hbar_k > 0) || steps_per_hbar_k < 1)
    throw GridError("grid: hbar k and steps per hbar k must be positive");
  if (!(p_hi > p_lo) || !std::isfinite(p_lo) || !std::isfinite(p_hi) || !std::isfinite(p_anchor))
    throw GridError("grid: need a finite range with p_hi > p_lo");
  const double h = hbar_k / steps_per_hbar_k;
  const double jlo = std::floor((p_lo - p_anchor) / h);
  const double jhi = std::ceil((p_hi - p_anchor) / h);
  const double n = jhi - jlo + 1;
  if (n > 5e7) throw GridError("grid: more than 5e7 points requested");
  MomentumGrid g;
  g.spacing = h;
  g.steps_per_hbar_k = steps_per_hbar_k;
  g.p_min = p_anchor + jlo * h;
  g.n_points = static_cast<int>(n);
  g.p_max = g.p(g.n_points - 1);
  return g;
}

double SpinorPacket::norm() const {
  double acc = 0.0;
  for (std::size_t j = 0; j < amp_e.size(); ++j) acc += std::norm(amp_e[j]) + std::norm(amp_g[j]);
  return acc * grid.spacing;
}

SpinorPacket gaussian_packet(const MomentumGrid& grid, double p0, double sigma_p) {
  if (!(sigma_p > 0) || !std::isfinite(p0)) throw GridError("gaussian_packet: need sigma_p > 0");
  if (p0 - 5 * sigma_p < grid.p_min || p0 + 5 * sigma_p > grid.p_max)
    throw GridError("gaussian_packet: packet closer than 5 sigma to the grid edge");
  if (sigma_p < grid.spacing)
    throw GridError("gaussian_packet: sigma_p below the grid spacing");
  SpinorPacket pkt;
  pkt.grid = grid;
  pkt.amp_e.assign(grid.n_points, Complex(0.0));
  pkt.amp_g.resize(grid.n_points);
  double acc = 0.0;
  for (int j = 0; j < grid.n_points; ++j) {
    const double x = (grid.p(j) - p0) / sigma_p;
    const double v = std::exp(-x * x / 4.0);
    pkt.amp_g[j] = v;
    acc += v * v;
  }
  const double c = 1.0 / std::sqrt(acc * grid.spacing);
  for (auto& a : pkt.amp_g) a *= c;
  return pkt;
}

double snap_time(const MomentumGrid& grid, const PhysicalParams& phys, double t) {
  const double ma = phys.mass * std::abs(phys.accel);
  if (ma == 0.0) return t;
  const double unit = grid.spacing / ma;
  return std::round(t / unit) * unit;
}

CmPhase cm_phase(const MomentumGrid& grid, const PhysicalParams& phys, double t) {
  CmPhase cm;
  cm.shift_momentum = phys.mass * phys.accel * t;
  const double steps = cm.shift_momentum / grid.spacing;
  cm.shift_steps = static_cast<int>(std::llround(steps));
  if (std::abs(steps - cm.shift_steps) > 1e-3)
    throw GridError("cm_phase: M a t is " + std::to_string(steps) +
                    " grid steps, not within 1e-3 of an integer");
  const double kin = t / (2.0 * phys.mass * kHbar);
  const double dr = t * t * phys.accel / (2.0 * kHbar);
  cm.kinetic.resize(grid.n_points);
  cm.drift.resize(grid.n_points);
  for (int j = 0; j < grid.n_points; ++j) {
    const double p = grid.p(j);
    cm.kinetic[j] = std::polar(1.0, -kin * p * p);
    cm.drift[j] = std::polar(1.0, dr * p);
  }
  cm.cnumber = t * t * t * phys.mass * phys.accel * phys.accel / (3.0 * kHbar);
  return cm;
}

double apply_cm_phase(SpinorPacket& pkt, const CmPhase& cm) {
  const int n = pkt.grid.n_points;
  const Complex c = std::polar(1.0, cm.cnumber);
  double lost = 0.0;
  auto row = [&](std::vector<Complex>& a) {
    std::vector<Complex> out(n, Complex(0.0));
    for (int j = 0; j < n; ++j) {
      if (a[j] == 0.0) continue;
      const Complex v = a[j] * cm.drift[j] * c;
      const int k = j + cm.shift_steps;
      if (k < 0 || k >= n) {
        lost += std::norm(v);
        continue;
      }
      out[k] = v * cm.kinetic[k];
    }
    a.swap(out);
  };
  row(pkt.amp_e);
  row(pkt.amp_g);
  return lost * pkt.grid.spacing;
}

double excitation_probability(const SpinorPacket& pkt) {
  double acc = 0.0;
  for (const auto& a : pkt.amp_e) acc += std::norm(a);
  return acc * pkt.grid.spacing;
}

double expectation_momentum(const SpinorPacket& pkt) {
  double num = 0.0, den = 0.0;
  for (int j = 0; j < pkt.grid.n_points; ++j) {
    const double w = std::norm(pkt.amp_e[j]) + std::norm(pkt.amp_g[j]);
    num += w * pkt.grid.p(j);
    den += w;
  }
  if (den == 0.0) throw PreconditionError("expectation_momentum: empty packet");
  return num / den;
}

}  // namespace gravrabi::sim
