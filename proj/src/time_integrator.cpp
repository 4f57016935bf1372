#include "surfnse/time_integrator.hpp"

#include <cmath>
#include <iostream>

namespace surfnse {

RhsCache precompute_rhs(const Discretization& d, const ManufacturedCase& mcase,
                        const SolverParams& params, int n_steps) {
  RhsCache cache;
  cache.momentum.reserve(n_steps);
  cache.continuity.reserve(n_steps);
  for (int k = 1; k <= n_steps; ++k) {
    const double t = k * params.dt;
    cache.momentum.push_back(assemble_momentum_rhs(d, mcase, t, params));
    cache.continuity.push_back(assemble_continuity_rhs(d, mcase, t));
  }
  return cache;
}

TimeState initialize(const Discretization& d, const ManufacturedCase& mcase) {
  TimeState state;
  state.u_prev = interpolate_velocity(d.mesh, d.dofs, [&](const Vec3& x) {
                   return mcase.velocity(x, 0.0);
                 }).values;
  return state;
}

void advance(TimeState& state, const Discretization& d, const StepSystem& sys,
             SaddleSolver& solver, const ManufacturedCase& mcase,
             const SolverParams& params, const RhsCache* cache) {
  const int k = state.k + 1;
  const double t = k * params.dt;
  const double dt = params.dt;

  double sigma;
  Vector mass_history;
  Vector u_tilde;
  if (k == 1) {
    sigma = 1.0 / dt;
    mass_history = sys.mass * (state.u_prev / dt);
    u_tilde = state.u_prev;
  } else {
    sigma = 1.5 / dt;
    mass_history =
        sys.mass * ((4.0 * state.u_prev - state.u_prev2) / (2.0 * dt));
    u_tilde = 2.0 * state.u_prev - state.u_prev2;
  }

  Vector rhs_u = cache ? Vector(cache->momentum[k - 1])
                       : assemble_momentum_rhs(d, mcase, t, params);
  rhs_u += mass_history;
  const Vector rhs_p = cache ? cache->continuity[k - 1]
                             : assemble_continuity_rhs(d, mcase, t);

  SaddleSolution sol;
  if (params.form == NonlinearForm::none) {
    sol = solver.solve(sigma, nullptr, rhs_u, rhs_p);
  } else {
    const SparseMatrix conv = assemble_convection(d, u_tilde, params.form);
    sol = solver.solve(sigma, &conv, rhs_u, rhs_p);
  }

  state.u_prev2 = std::move(state.u_prev);
  state.u_prev = std::move(sol.u);
  state.p = std::move(sol.p);
  state.k = k;
  state.t = t;

  StepRecord rec;
  rec.k = k;
  rec.t = t;
  rec.kinetic = 0.5 * state.u_prev.dot(sys.mass * state.u_prev);
  rec.solver_residual = sol.residual;
  rec.solver_iterations = sol.iterations;
  state.log.push_back(rec);
}

Trajectory run(const Discretization& d, const StepSystem& sys,
               const ManufacturedCase& mcase, const SolverParams& params,
               SolverBackend backend, const RhsCache* cache) {
  SolverParams p = params;
  p.resolve_defaults(d.mesh.h);
  p.validate();

  const double steps_exact = p.t_end / p.dt;
  int n_steps = int(std::floor(steps_exact + 1e-9));
  if (std::abs(steps_exact - n_steps) > 1e-9)
    std::cerr << "surfnse: T/dt = " << steps_exact
              << " is not an integer, rounding down to " << n_steps
              << " steps\n";

  TimeState state = initialize(d, mcase);
  SaddleSolver solver(sys, backend, p.level);

  Trajectory traj;
  traj.dt = p.dt;
  traj.u.push_back(state.u_prev);
  traj.p.emplace_back();

  const double kinetic0 = 0.5 * state.u_prev.dot(sys.mass * state.u_prev);
  for (int k = 1; k <= n_steps; ++k) {
    advance(state, d, sys, solver, mcase, p, cache);
    state.log.back().kinetic_norm =
        kinetic0 > 0.0 ? state.log.back().kinetic / kinetic0 : 0.0;
    traj.u.push_back(state.u_prev);
    traj.p.push_back(state.p);
  }
  traj.log = state.log;
  return traj;
}

}  // namespace surfnse
