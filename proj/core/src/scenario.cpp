#include <gravrabi/scenario.hpp>

#include <gravrabi/errors.hpp>

#include "quad.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace gravrabi::sim {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return {};
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

double to_number(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty() || !std::isfinite(v))
    throw ConfigError("config: '" + key + "' expects a finite number, got '" + t + "'", key);
  return v;
}

std::vector<double> to_list(const std::string& key, const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(to_number(key, item));
  if (out.empty()) throw ConfigError("config: '" + key + "' is empty", key);
  return out;
}

bool to_bool(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  if (t == "true" || t == "1") return true;
  if (t == "false" || t == "0") return false;
  throw ConfigError("config: '" + key + "' expects true or false", key);
}

const std::set<std::string>& known_keys() {
  static const std::set<std::string> k = {
      "mass_kg", "wave_number_per_m", "rabi_rad_s", "omega_tilde", "laser_freq_rad_s",
      "detuning_rad_s", "xi0", "accel_m_s2", "phase_rad", "energy_excited_J",
      "energy_ground_J", "gamma_excited_per_s", "gamma_ground_per_s", "p0_kg_m_s",
      "p0_hbar_k", "sigma_p_kg_m_s", "sigma_p_hbar_k", "grid_steps_per_hbar_k",
      "grid_margin_hbar_k", "times_s", "times_tau_a", "snap_times", "mode"};
  return k;
}

Scenario parse_impl(std::istream& in) {
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config: line " + std::to_string(lineno) + " has no '='", line);
    const std::string key = trim(line.substr(0, eq));
    if (!known_keys().count(key)) throw ConfigError("config: unknown key '" + key + "'", key);
    if (kv.count(key)) throw ConfigError("config: duplicate key '" + key + "'", key);
    kv[key] = trim(line.substr(eq + 1));
  }

  auto has = [&](const char* k) { return kv.count(k) > 0; };
  auto num = [&](const char* k, double def) { return has(k) ? to_number(k, kv[k]) : def; };
  auto exclusive = [&](std::initializer_list<const char*> keys) {
    const char* seen = nullptr;
    for (const char* k : keys) {
      if (!has(k)) continue;
      if (seen)
        throw ConfigError(std::string("config: '") + k + "' conflicts with '" + seen + "'", k);
      seen = k;
    }
  };
  auto require = [&](std::initializer_list<const char*> keys) {
    for (const char* k : keys)
      if (has(k)) return;
    throw ConfigError(std::string("config: missing required key '") + *keys.begin() + "'",
                      *keys.begin());
  };

  exclusive({"rabi_rad_s", "omega_tilde"});
  exclusive({"laser_freq_rad_s", "detuning_rad_s", "xi0"});
  exclusive({"p0_kg_m_s", "p0_hbar_k"});
  exclusive({"sigma_p_kg_m_s", "sigma_p_hbar_k"});
  exclusive({"times_s", "times_tau_a"});
  require({"mass_kg"});
  require({"wave_number_per_m"});
  require({"sigma_p_kg_m_s", "sigma_p_hbar_k"});
  require({"times_s", "times_tau_a"});
  if (has("mode") && kv["mode"] != "evolve")
    throw ConfigError("config: 'mode' must be 'evolve'", "mode");

  Scenario sc;
  PhysicalParams& ph = sc.phys;
  ph.mass = num("mass_kg", 0);
  ph.wave_number = num("wave_number_per_m", 0);
  ph.accel = num("accel_m_s2", 0);
  ph.phase = num("phase_rad", 0);
  ph.energy_excited = num("energy_excited_J", 0);
  ph.energy_ground = num("energy_ground_J", 0);
  ph.gamma_excited = num("gamma_excited_per_s", 0);
  ph.gamma_ground = num("gamma_ground_per_s", 0);
  if (!(ph.mass > 0)) throw ConfigError("config: 'mass_kg' must be > 0", "mass_kg");
  if (ph.wave_number == 0)
    throw ConfigError("config: 'wave_number_per_m' must be nonzero", "wave_number_per_m");
  const double hk = kHbar * std::abs(ph.wave_number);

  sc.packet.p0 = has("p0_hbar_k") ? num("p0_hbar_k", 0) * hk : num("p0_kg_m_s", 0);
  sc.packet.sigma_p =
      has("sigma_p_hbar_k") ? num("sigma_p_hbar_k", 0) * hk : num("sigma_p_kg_m_s", 0);
  if (!(sc.packet.sigma_p > 0)) {
    const char* k = has("sigma_p_hbar_k") ? "sigma_p_hbar_k" : "sigma_p_kg_m_s";
    throw ConfigError(std::string("config: '") + k + "' must be > 0", k);
  }

  if (has("grid_steps_per_hbar_k")) {
    const double v = num("grid_steps_per_hbar_k", 0);
    if (!(v >= 1) || v != std::floor(v) || v > 1e6)
      throw ConfigError("config: 'grid_steps_per_hbar_k' must be a positive integer",
                        "grid_steps_per_hbar_k");
    sc.grid.steps_per_hbar_k = static_cast<int>(v);
  }
  sc.grid.margin_hbar_k = num("grid_margin_hbar_k", sc.grid.margin_hbar_k);
  if (!(sc.grid.margin_hbar_k >= 0))
    throw ConfigError("config: 'grid_margin_hbar_k' must be >= 0", "grid_margin_hbar_k");
  if (has("snap_times")) sc.snap_times = to_bool("snap_times", kv["snap_times"]);

  // Rabi frequency: the reduced form needs the gravitational time scale.
  const double ka = ph.wave_number * ph.accel;
  const double tau_g = ka != 0 ? 1.0 / std::sqrt(std::abs(ka)) : 0.0;
  if (has("omega_tilde")) {
    if (tau_g == 0)
      throw ConfigError("config: 'omega_tilde' needs nonzero accel_m_s2", "omega_tilde");
    ph.rabi = num("omega_tilde", 0) / tau_g;
  } else {
    ph.rabi = num("rabi_rad_s", 0);
  }
  if (!(ph.rabi >= 0)) {
    const char* k = has("omega_tilde") ? "omega_tilde" : "rabi_rad_s";
    throw ConfigError(std::string("config: '") + k + "' must be >= 0", k);
  }

  // Quad sums so laser_freq carries a single rounding.
  using detail::qreal;
  const qreal bohr = (qreal(ph.energy_excited) - qreal(ph.energy_ground)) / qreal(kHbar);
  // Same time unit as reduce_params.
  const double tau = tau_g != 0 ? tau_g : (ph.rabi > 0 ? 1.0 / ph.rabi : 1.0);
  if (has("laser_freq_rad_s")) {
    ph.laser_freq = num("laser_freq_rad_s", 0);
  } else if (has("detuning_rad_s")) {
    ph.laser_freq = static_cast<double>(bohr + qreal(num("detuning_rad_s", 0)));
  } else {
    // Detuning seen by the pair (ground p0, excited p0 + hbar k).
    const qreal q = qreal(sc.packet.p0) + qreal(kHbar) * qreal(ph.wave_number) / 2;
    ph.laser_freq = static_cast<double>(bohr + qreal(num("xi0", 0)) / qreal(tau) +
                                        qreal(ph.wave_number) * q / qreal(ph.mass));
  }

  const std::vector<double> ts =
      has("times_s") ? to_list("times_s", kv["times_s"]) : to_list("times_tau_a", kv["times_tau_a"]);
  const char* tkey = has("times_s") ? "times_s" : "times_tau_a";
  const double unit = has("times_s") ? 1.0 : tau;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (ts[i] < 0) throw ConfigError(std::string("config: '") + tkey + "' must be >= 0", tkey);
    if (i > 0 && ts[i] < ts[i - 1])
      throw ConfigError(std::string("config: '") + tkey + "' must be ascending", tkey);
    sc.times.push_back(ts[i] * unit);
  }

  ph.validate();
  return sc;
}

}  // namespace

Scenario parse_scenario(std::istream& in) {
  try {
    return parse_impl(in);
  } catch (const DomainError& e) {
    throw ConfigError(std::string("config: ") + e.what(), "physical parameters");
  }
}

Scenario load_scenario(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("config: cannot open '" + path + "'", "--config");
  return parse_scenario(f);
}

}  // namespace gravrabi::sim
