/// \file time_integrator.hpp
/// \brief Semi-implicit BDF time stepping: BDF1 startup, BDF2 thereafter,
///        with extrapolated convection.
#pragma once

#include <optional>
#include <vector>

#include "surfnse/assembly.hpp"
#include "surfnse/solver.hpp"

namespace surfnse {

inline double bdf1_time_derivative(double u_k, double u_km1, double dt) {
  return (u_k - u_km1) / dt;
}
inline double bdf2_time_derivative(double u_k, double u_km1, double u_km2,
                                   double dt) {
  return (3.0 * u_k - 4.0 * u_km1 + u_km2) / (2.0 * dt);
}

struct StepRecord {
  int k = 0;
  double t = 0.0;
  double kinetic = 0.0;
  double kinetic_norm = 0.0;
  double solver_residual = 0.0;
  int solver_iterations = 0;
};

struct TimeState {
  int k = 0;
  double t = 0.0;
  Vector u_prev;   // u^k
  Vector u_prev2;  // u^{k-1}; empty before the first step
  Vector p;        // p^k; empty before the first step
  std::vector<StepRecord> log;
};

/// Solution history of a full run; u[k], p[k] at t = k dt (p[0] is empty,
/// the scheme produces pressure from step 1 on).
struct Trajectory {
  double dt = 0.0;
  std::vector<Vector> u;
  std::vector<Vector> p;
  std::vector<StepRecord> log;  // one record per executed step
};

/// Optional precomputed right-hand sides, index k-1 holds the data at t^k.
/// Lets parameter sweeps on a fixed mesh share the forcing quadrature.
struct RhsCache {
  std::vector<Vector> momentum;
  std::vector<Vector> continuity;
};

RhsCache precompute_rhs(const Discretization& d, const ManufacturedCase& mcase,
                        const SolverParams& params, int n_steps);

/// Initial state: P1 interpolant of the exact velocity at t = 0.
TimeState initialize(const Discretization& d, const ManufacturedCase& mcase);

/// One BDF step: assembles the extrapolated convection, solves the saddle
/// system, rotates the history.
void advance(TimeState& state, const Discretization& d, const StepSystem& sys,
             SaddleSolver& solver, const ManufacturedCase& mcase,
             const SolverParams& params, const RhsCache* cache = nullptr);

/// Runs N = floor(T / dt) steps and records the full history.
Trajectory run(const Discretization& d, const StepSystem& sys,
               const ManufacturedCase& mcase, const SolverParams& params,
               SolverBackend backend = SolverBackend::automatic,
               const RhsCache* cache = nullptr);

}  // namespace surfnse
