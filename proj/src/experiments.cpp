#include "surfnse/experiments.hpp"

#include <cmath>
#include <filesystem>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "surfnse/vtk.hpp"

namespace surfnse {

namespace {

void check_level_budget(const ExperimentConfig& config, int level) {
  if (level >= 5 && !config.allow_large)
    throw std::invalid_argument(
        "level " + std::to_string(level) +
        " exceeds the desk-scale cap (4); pass --allow-large to override");
}

SolverParams make_params(const ExperimentConfig& config, int level, double h,
                         double dt, double tau) {
  SolverParams p;
  p.nu = config.nu;
  p.tau = tau;
  p.dt = dt;
  p.t_end = config.t_end;
  p.level = level;
  p.form = config.form;
  p.case_id = config.case_id;
  p.resolve_defaults(h);
  p.validate();
  return p;
}

void maybe_write_snapshots(const ExperimentConfig& config,
                           const Discretization& d, const Trajectory& traj,
                           const std::string& tag) {
  if (!config.vtk || config.out_dir.empty()) return;
  std::filesystem::create_directories(config.out_dir);
  const Vector empty;
  write_solution_vtk(d, traj.u.front(), empty,
                     config.out_dir + "/" + tag + "_initial.vtk");
  write_solution_vtk(d, traj.u.back(),
                     traj.p.back().size() ? traj.p.back() : empty,
                     config.out_dir + "/" + tag + "_final.vtk");
}

void write_metadata(std::ostream& out, const ExperimentConfig& config,
                    const std::string& command) {
  out << "# command=" << command << " case=" << to_string(config.case_id)
      << " form=" << to_string(config.form) << " nu=" << config.nu
      << " t_end=" << config.t_end << " quad_degree=" << config.quad_degree
      << " tau_rule=" << (config.tau > 0.0 ? "fixed" : config.tau_rule)
      << "\n";
}

}  // namespace

double ExperimentConfig::resolve_tau(double h) const {
  if (tau > 0.0) return tau;
  if (tau_rule == "h-2") return 1.0 / (h * h);
  throw std::invalid_argument("unknown tau rule '" + tau_rule + "'");
}

double ExperimentConfig::resolve_dt(int level) const {
  if (dt > 0.0) return dt;
  return std::pow(2.0, 1.0 - level) / 10.0;
}

ConvergenceResult run_convergence(const ExperimentConfig& config) {
  if (config.levels.empty())
    throw std::invalid_argument("convergence: no levels given");
  for (std::size_t i = 0; i + 1 < config.levels.size(); ++i)
    if (config.levels[i] >= config.levels[i + 1])
      throw std::invalid_argument("convergence: levels must be ascending");

  const ManufacturedCase mcase = make_case(config.case_id);
  ConvergenceResult result;
  for (int level : config.levels) {
    check_level_budget(config, level);
    const Discretization d = build_discretization(level, config.quad_degree);
    const double dt = config.resolve_dt(level);
    const double tau = config.resolve_tau(d.mesh.h);
    const SolverParams params = make_params(config, level, d.mesh.h, dt, tau);
    const StepSystem sys = assemble_system(d, params);
    const Trajectory traj = run(d, sys, mcase, params, config.backend);
    ConvergenceRow row;
    row.level = level;
    row.h = d.mesh.h;
    row.dt = dt;
    row.tau = tau;
    row.nu = config.nu;
    row.errors = error_norms(traj, d, mcase);
    result.rows.push_back(row);
    maybe_write_snapshots(config, d, traj,
                          "convergence_l" + std::to_string(level));
  }

  auto column = [&](auto member) {
    std::vector<double> v;
    for (const auto& row : result.rows) v.push_back(row.errors.*member);
    return convergence_rates(v);
  };
  result.rate_linf_l2 = column(&ErrorNorms::linf_l2);
  result.rate_l2_h1 = column(&ErrorNorms::l2_h1);
  result.rate_l2_un = column(&ErrorNorms::l2_un);
  result.rate_l2_p = column(&ErrorNorms::l2_p);
  return result;
}

std::vector<SweepRow> run_penalty_sweep(const ExperimentConfig& config) {
  if (config.tau_exponents.empty())
    throw std::invalid_argument("penalty-sweep: no tau exponents given");
  check_level_budget(config, config.level);

  const ManufacturedCase mcase = make_case(config.case_id);
  const Discretization d =
      build_discretization(config.level, config.quad_degree);
  const double dt = config.dt > 0.0 ? config.dt : 0.02;

  // The blocks other than the combined stiffness do not depend on tau, and
  // neither do the right-hand sides; assemble them once for the whole sweep.
  SolverParams params = make_params(config, config.level, d.mesh.h, dt, 1.0);
  StepSystem sys = assemble_system(d, params);
  const int n_steps = int(std::floor(params.t_end / dt + 1e-9));
  const RhsCache cache = precompute_rhs(d, mcase, params, n_steps);

  std::vector<SweepRow> rows;
  for (int exponent : config.tau_exponents) {
    params.tau = std::pow(2.0, exponent);
    sys.stiffness = params.nu * sys.visc;
    sys.stiffness += params.tau * sys.penalty;
    sys.stiffness += params.rho_u * sys.stab_u;
    const Trajectory traj = run(d, sys, mcase, params, config.backend, &cache);
    const ErrorNorms norms = error_norms(traj, d, mcase);
    rows.push_back({params.tau, norms.linf_l2, norms.l2_h1, norms.l2_p});
  }
  return rows;
}

std::vector<EnergyRow> run_energy(const ExperimentConfig& config) {
  if (config.case_id != CaseId::killing && config.case_id != CaseId::sol2a)
    throw std::invalid_argument("energy: case must be killing or sol2a");
  check_level_budget(config, config.level);

  const ManufacturedCase mcase = make_case(config.case_id);
  const Discretization d =
      build_discretization(config.level, config.quad_degree);
  const double dt = config.dt > 0.0 ? config.dt : 0.1;
  const double tau = config.resolve_tau(d.mesh.h);
  const SolverParams params =
      make_params(config, config.level, d.mesh.h, dt, tau);
  const StepSystem sys = assemble_system(d, params);
  const Trajectory traj = run(d, sys, mcase, params, config.backend);
  maybe_write_snapshots(config, d, traj, "energy_" + to_string(config.case_id));

  std::vector<EnergyRow> rows;
  const double kinetic0 = kinetic_energy(traj.u[0], sys.mass);
  rows.push_back({0, 0.0, kinetic0, 1.0});
  for (const auto& rec : traj.log)
    rows.push_back({rec.k, rec.t, rec.kinetic, rec.kinetic_norm});
  return rows;
}

void write_convergence_csv(std::ostream& out, const ExperimentConfig& config,
                           const ConvergenceResult& result) {
  write_metadata(out, config, "convergence");
  out << "level,h,dt,tau,nu,err_LinfL2,err_L2H1,err_uN,err_pL2,"
         "rate_LinfL2,rate_L2H1,rate_uN,rate_pL2\n";
  out.precision(12);
  for (std::size_t i = 0; i < result.rows.size(); ++i) {
    const auto& row = result.rows[i];
    out << row.level << "," << row.h << "," << row.dt << "," << row.tau << ","
        << row.nu << "," << row.errors.linf_l2 << "," << row.errors.l2_h1
        << "," << row.errors.l2_un << "," << row.errors.l2_p << ",";
    if (i == 0) {
      out << ",,,\n";
    } else {
      out << result.rate_linf_l2[i - 1] << "," << result.rate_l2_h1[i - 1]
          << "," << result.rate_l2_un[i - 1] << "," << result.rate_l2_p[i - 1]
          << "\n";
    }
  }
}

void write_sweep_csv(std::ostream& out, const ExperimentConfig& config,
                     const std::vector<SweepRow>& rows) {
  write_metadata(out, config, "penalty-sweep");
  out << "# level=" << config.level
      << " dt=" << (config.dt > 0.0 ? config.dt : 0.02) << "\n";
  out << "tau,err_LinfL2,err_L2H1,err_pL2\n";
  out.precision(12);
  for (const auto& row : rows)
    out << row.tau << "," << row.err_linf_l2 << "," << row.err_l2_h1 << ","
        << row.err_l2_p << "\n";
}

void write_energy_csv(std::ostream& out, const ExperimentConfig& config,
                      const std::vector<EnergyRow>& rows) {
  write_metadata(out, config, "energy");
  out << "# level=" << config.level
      << " dt=" << (config.dt > 0.0 ? config.dt : 0.1) << "\n";
  out << "step,time,kinetic,kinetic_norm\n";
  out.precision(12);
  for (const auto& row : rows)
    out << row.step << "," << row.time << "," << row.kinetic << ","
        << row.kinetic_norm << "\n";
}

}  // namespace surfnse
