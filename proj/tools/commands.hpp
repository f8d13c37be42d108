#pragma once

#include <iosfwd>
#include <optional>
#include <string>

// Subcommands of the gravrabi tool. Each returns the process exit code:
// 0 ok, 1 usage or config error, 2 threshold or precondition violation.
// CSV goes to `out` only when the whole command succeeded.

namespace gravrabi::cli {

struct ValidateOptions {
  std::optional<double> xi0, omega, s;
  std::optional<int> zeta;
  /// Points per axis of a uniform grid; 0 selects the fixed sweep.
  int grid = 0;
  double max_elem_err = 1e-8;
  double max_unitarity_err = 1e-9;
  double max_det_err = 1e-10;
};

struct MagnusOptions {
  double omega = 1.0;
  double xi0 = 0.0;
  int zeta = 1;
  double s_min = 5.8;
  double s_max = 6.8;
  double ds = 0.01;
  /// Strength of k.a relative to the reduced units; 0 < g <= 1.
  double gravity_scale = 0.005;
};

int cmd_validate(const ValidateOptions& opt, std::ostream& out, std::ostream& err);
int cmd_evolve(const std::string& config_path, std::ostream& out, std::ostream& err);
int cmd_magnus(const MagnusOptions& opt, std::ostream& out, std::ostream& err);

/// Value with 17 significant digits.
std::string csv_number(double v);

}  // namespace gravrabi::cli
