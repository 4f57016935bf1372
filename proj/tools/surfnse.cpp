/// \file surfnse.cpp
/// \brief Command-line driver for the convergence, penalty-sweep and energy
///        experiments; results are written as CSV (plus optional VTK
///        snapshots).
#include <filesystem>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "surfnse/experiments.hpp"

namespace {

using surfnse::ExperimentConfig;

/// "1..3" or "1,2,3" or "3".
std::vector<int> parse_range(const std::string& spec) {
  std::vector<int> values;
  const auto dots = spec.find("..");
  if (dots != std::string::npos) {
    const int lo = std::stoi(spec.substr(0, dots));
    const int hi = std::stoi(spec.substr(dots + 2));
    if (hi < lo) throw CLI::ValidationError("range '" + spec + "' is empty");
    for (int v = lo; v <= hi; ++v) values.push_back(v);
    return values;
  }
  std::size_t pos = 0;
  while (pos < spec.size()) {
    const auto comma = spec.find(',', pos);
    const auto piece = spec.substr(pos, comma - pos);
    values.push_back(std::stoi(piece));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return values;
}

std::ofstream open_output(const std::string& dir, const std::string& name) {
  std::filesystem::create_directories(dir);
  const auto path = std::filesystem::path(dir) / name;
  std::ofstream out(path);
  if (!out)
    throw std::runtime_error("cannot open '" + path.string() + "'");
  std::cout << "writing " << path.string() << "\n";
  return out;
}

void add_common(CLI::App* cmd, ExperimentConfig& config, std::string& solver,
                std::string& case_name, std::string& form_name) {
  cmd->add_option("--nu", config.nu, "viscosity");
  cmd->add_option("--case", case_name, "exact1 | sol2a | sol2b | killing");
  cmd->add_option("--form", form_name, "convective | rotational | none");
  cmd->add_option("--tau", config.tau, "fixed penalty parameter");
  cmd->add_option("--tau-rule", config.tau_rule,
                  "penalty rule when --tau is unset (h-2)");
  cmd->add_option("--tmax", config.t_end, "final time");
  cmd->add_option("--quad-degree", config.quad_degree,
                  "surface quadrature degree");
  cmd->add_option("--solver", solver, "auto | direct | gmres");
  cmd->add_option("--out", config.out_dir, "output directory");
  cmd->add_flag("--vtk", config.vtk, "write VTK snapshots");
  cmd->add_flag("--allow-large", config.allow_large,
                "permit refinement levels above 4");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Trace finite element solver for the incompressible "
               "Navier-Stokes equations on a level-set surface"};
  app.require_subcommand(1);

  ExperimentConfig config;
  std::string solver = "auto";
  std::string case_name;  // per-command default when empty
  std::string form_name = "convective";
  std::string levels_spec = "1..3";
  std::string exponents_spec = "0..16";

  auto* conv = app.add_subcommand("convergence", "error norms across levels");
  conv->add_option("--levels", levels_spec, "e.g. 1..3 or 1,2,3");
  conv->add_option("--dt", config.dt, "time step (default 2^(1-l)/10)");
  add_common(conv, config, solver, case_name, form_name);

  auto* sweep =
      app.add_subcommand("penalty-sweep", "error norms across tau = 2^k");
  sweep->add_option("--level", config.level, "refinement level");
  sweep->add_option("--dt", config.dt, "time step");
  sweep->add_option("--tau-exponents", exponents_spec, "e.g. 0..16");
  add_common(sweep, config, solver, case_name, form_name);

  auto* energy = app.add_subcommand("energy", "kinetic-energy time series");
  energy->add_option("--level", config.level, "refinement level");
  energy->add_option("--dt", config.dt, "time step");
  add_common(energy, config, solver, case_name, form_name);

  CLI11_PARSE(app, argc, argv);

  try {
    config.form = surfnse::form_from_string(form_name);
    config.backend = surfnse::backend_from_string(solver);
    if (config.out_dir.empty()) config.out_dir = "out";

    if (conv->parsed()) {
      config.case_id =
          surfnse::case_from_string(case_name.empty() ? "exact1" : case_name);
      config.levels = parse_range(levels_spec);
      const auto result = run_convergence(config);
      auto out = open_output(config.out_dir, "convergence.csv");
      write_convergence_csv(out, config, result);
    } else if (sweep->parsed()) {
      config.case_id =
          surfnse::case_from_string(case_name.empty() ? "sol2b" : case_name);
      config.tau_exponents = parse_range(exponents_spec);
      const auto rows = run_penalty_sweep(config);
      auto out = open_output(config.out_dir, "sweep.csv");
      write_sweep_csv(out, config, rows);
    } else if (energy->parsed()) {
      config.case_id =
          surfnse::case_from_string(case_name.empty() ? "killing" : case_name);
      const auto rows = run_energy(config);
      auto out = open_output(config.out_dir, "energy.csv");
      write_energy_csv(out, config, rows);
    }
  } catch (const std::exception& err) {
    std::cerr << "surfnse: " << err.what() << "\n";
    return 1;
  }
  return 0;
}
