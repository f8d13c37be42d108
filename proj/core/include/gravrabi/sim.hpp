#pragma once

#include <gravrabi/params.hpp>
#include <gravrabi/types.hpp>

#include <vector>

// Wavepackets on a uniform momentum grid.

namespace gravrabi::sim {

/// p_j = p_min + j * spacing, j = 0 .. n_points-1.
struct MomentumGrid {
  double p_min = 0.0;
  double p_max = 0.0;
  int n_points = 0;
  double spacing = 0.0;
  /// Grid steps per hbar k; the photon kick is exactly this many steps.
  int steps_per_hbar_k = 0;

  double p(int j) const { return p_min + j * spacing; }
};

/// Grid with spacing hbar k / steps_per_hbar_k covering [p_lo, p_hi]. The
/// point nearest p_anchor lies exactly on the grid.
MomentumGrid commensurate_grid(double hbar_k, int steps_per_hbar_k, double p_lo, double p_hi,
                               double p_anchor);

struct SpinorPacket {
  MomentumGrid grid;
  std::vector<Complex> amp_e;
  std::vector<Complex> amp_g;
  double time = 0.0;

  /// sum (|e|^2 + |g|^2) * spacing
  double norm() const;
};

/// Centre-of-mass factor exp(-it p^2/2M hbar) exp(it M a x/hbar) exp(it^2 a p/2 hbar)
/// exp(it^3 M a^2/3 hbar), applied right to left on momentum amplitudes.
struct CmPhase {
  std::vector<Complex> kinetic;  // at the translated momenta, index of the new grid
  double shift_momentum = 0.0;   // M a t
  int shift_steps = 0;           // M a t in grid units
  std::vector<Complex> drift;    // at the original momenta
  double cnumber = 0.0;          // phase t^3 M a^2 / 3 hbar
};

/// Throws GridError unless M a t lies within 1e-3 step of an integer shift.
CmPhase cm_phase(const MomentumGrid& grid, const PhysicalParams& phys, double t);

/// Applies a CmPhase in place; amplitude pushed off the grid is dropped.
/// Returns the dropped probability.
double apply_cm_phase(SpinorPacket& pkt, const CmPhase& cm);

/// Nearest time at which M a t is an integer number of grid steps.
double snap_time(const MomentumGrid& grid, const PhysicalParams& phys, double t);

/// Ground-state Gaussian in momentum, normalized on the grid. Throws GridError
/// unless [p0 - 5 sigma, p0 + 5 sigma] lies inside the grid.
SpinorPacket gaussian_packet(const MomentumGrid& grid, double p0, double sigma_p);

struct EvolveOptions {
  bool apply_cm_phase = true;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
  /// Input pairs whose probability is below this are not propagated.
  double negligible_probability = 1e-24;
  /// Largest probability allowed to leave the grid.
  double max_lost_probability = 1e-10;
};

/// U(t) applied to a packet prepared at time 0.
SpinorPacket evolve_packet(const SpinorPacket& pkt, const PhysicalParams& phys, double t,
                           const EvolveOptions& opt = {});

double excitation_probability(const SpinorPacket& pkt);
double expectation_momentum(const SpinorPacket& pkt);

struct PacketSpec {
  double p0 = 0.0;       // kg m/s
  double sigma_p = 0.0;  // kg m/s
};

struct GridSpec {
  int steps_per_hbar_k = 800;
  /// Extra width on each side, in units of hbar k.
  double margin_hbar_k = 2.0;
};

struct Scenario {
  PhysicalParams phys;
  PacketSpec packet;
  GridSpec grid;
  std::vector<double> times;  // s, ascending
  bool snap_times = true;
};

struct SeriesRow {
  double t = 0.0;
  double prob_excited = 0.0;
  double mean_p = 0.0;
  double norm = 0.0;
};

/// Grid wide enough for the packet, both photon kicks and the largest M a t.
MomentumGrid scenario_grid(const Scenario& sc);

/// One row per time, each evolved from t = 0.
std::vector<SeriesRow> time_series(const Scenario& sc, const EvolveOptions& opt = {});

}  // namespace gravrabi::sim
