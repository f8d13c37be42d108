#pragma once

#include <gravrabi/sim.hpp>

#include <iosfwd>
#include <string>

// Flat key=value scenario files. One key per line, '#' starts a comment.
//
//   mass_kg, wave_number_per_m            required
//   rabi_rad_s | omega_tilde              Rabi frequency, SI or reduced
//   laser_freq_rad_s | detuning_rad_s | xi0
//                                         xi0 is the reduced detuning seen by the packet centre
//   accel_m_s2, phase_rad
//   energy_excited_J, energy_ground_J, gamma_excited_per_s, gamma_ground_per_s
//   p0_kg_m_s | p0_hbar_k                 packet centre (default 0)
//   sigma_p_kg_m_s | sigma_p_hbar_k       required
//   grid_steps_per_hbar_k, grid_margin_hbar_k
//   times_s | times_tau_a                 comma separated, ascending
//   snap_times                            true/false, default true
//   mode                                  only "evolve"

namespace gravrabi::sim {

/// Throws ConfigError naming the offending key.
Scenario parse_scenario(std::istream& in);
Scenario load_scenario(const std::string& path);

}  // namespace gravrabi::sim
