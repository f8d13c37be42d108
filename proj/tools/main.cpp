#include "commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

int emit(const std::string& path, const std::ostringstream& buf) {
  if (path.empty()) {
    std::cout << buf.str();
    return 0;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    std::cerr << "cannot write '" << path << "'\n";
    return 1;
  }
  f << buf.str();
  return f ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace gravrabi::cli;
  CLI::App app{"Two-level atom in a running laser wave under uniform acceleration"};
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("--out", out_path, "CSV destination (default standard output)");

  auto* validate = app.add_subcommand("validate", "closed form against the ODE oracle");
  ValidateOptions vo;
  validate->add_option("--xi0", vo.xi0, "single xi0");
  validate->add_option("--omega", vo.omega, "single reduced Rabi frequency");
  validate->add_option("--s", vo.s, "single reduced time");
  validate->add_option("--zeta", vo.zeta, "sign of k.a (+1 or -1)");
  validate->add_option("--grid", vo.grid, "points per axis of a uniform grid");

  auto* evolve = app.add_subcommand("evolve", "wavepacket time series from a config file");
  std::string config;
  evolve->add_option("--config", config, "key=value scenario file")->required();

  auto* magnus = app.add_subcommand("magnus", "Magnus exponent error near its singular points");
  MagnusOptions mo;
  magnus->add_option("--omega", mo.omega, "reduced Rabi frequency");
  magnus->add_option("--xi0", mo.xi0, "reduced detuning");
  magnus->add_option("--zeta", mo.zeta, "sign of k.a (-1, 0, +1)");
  magnus->add_option("--s-min", mo.s_min);
  magnus->add_option("--s-max", mo.s_max);
  magnus->add_option("--ds", mo.ds);
  magnus->add_option("--gravity-scale", mo.gravity_scale,
                     "k.a strength used for the sweep, in (0, 1]");

  // --out is accepted after the subcommand as well.
  for (auto* sub : {validate, evolve, magnus}) sub->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  std::ostringstream buf;
  int rc = 0;
  if (validate->parsed())
    rc = cmd_validate(vo, buf, std::cerr);
  else if (evolve->parsed())
    rc = cmd_evolve(config, buf, std::cerr);
  else
    rc = cmd_magnus(mo, buf, std::cerr);
  const int wrc = emit(out_path, buf);
  return rc != 0 ? rc : wrc;
}
