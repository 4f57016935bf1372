/// \file experiments.hpp
/// \brief The three experiment families (convergence study, penalty sweep,
///        energy runs) with CSV serialization.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "surfnse/diagnostics.hpp"

namespace surfnse {

struct ExperimentConfig {
  std::vector<int> levels;  // convergence study
  int level = 3;            // penalty sweep / energy runs
  double nu = 1.0;
  CaseId case_id = CaseId::exact1;
  NonlinearForm form = NonlinearForm::convective;
  double dt = -1.0;     // <= 0: convergence rule dt = 2^(1-l)/10
  double t_end = 1.0;
  double tau = -1.0;    // <= 0: resolve from tau_rule
  std::string tau_rule = "h-2";
  std::vector<int> tau_exponents;  // penalty sweep, tau = 2^k
  int quad_degree = 4;
  SolverBackend backend = SolverBackend::automatic;
  std::string out_dir;
  bool vtk = false;
  bool allow_large = false;  // levels >= 5 need an explicit opt-in

  double resolve_tau(double h) const;
  double resolve_dt(int level) const;
};

struct ConvergenceRow {
  int level = 0;
  double h = 0.0, dt = 0.0, tau = 0.0, nu = 0.0;
  ErrorNorms errors;
};

struct ConvergenceResult {
  std::vector<ConvergenceRow> rows;
  std::vector<double> rate_linf_l2, rate_l2_h1, rate_l2_un, rate_l2_p;
};

ConvergenceResult run_convergence(const ExperimentConfig& config);

struct SweepRow {
  double tau = 0.0;
  double err_linf_l2 = 0.0, err_l2_h1 = 0.0, err_l2_p = 0.0;
};

std::vector<SweepRow> run_penalty_sweep(const ExperimentConfig& config);

struct EnergyRow {
  int step = 0;
  double time = 0.0, kinetic = 0.0, kinetic_norm = 0.0;
};

std::vector<EnergyRow> run_energy(const ExperimentConfig& config);

void write_convergence_csv(std::ostream& out, const ExperimentConfig& config,
                           const ConvergenceResult& result);
void write_sweep_csv(std::ostream& out, const ExperimentConfig& config,
                     const std::vector<SweepRow>& rows);
void write_energy_csv(std::ostream& out, const ExperimentConfig& config,
                      const std::vector<EnergyRow>& rows);

}  // namespace surfnse
