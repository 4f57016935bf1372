/// \file diagnostics.hpp
/// \brief Error norms against exact solutions, kinetic energy, discrete
///        energy-balance residuals and convergence rates.
#pragma once

#include <vector>

#include "surfnse/time_integrator.hpp"

namespace surfnse {

struct ErrorNorms {
  double linf_l2 = 0.0;  // max_k |u^k - u_h^k|_L2
  double l2_h1 = 0.0;    // (sum_k dt |u^k - u_h^k|_1^2)^(1/2)
  double l2_un = 0.0;    // (sum_k dt |u_h . n_h|^2)^(1/2)
  double l2_p = 0.0;     // (sum_k dt |p^k - p_h^k|^2)^(1/2), mean-shifted
};

ErrorNorms error_norms(const Trajectory& traj, const Discretization& d,
                       const ManufacturedCase& mcase);

double kinetic_energy(const Vector& u, const SparseMatrix& mass);

/// Velocity L2(Gamma_h) distance between an FE field and the exact field at
/// time t (also used for interpolation-error studies).
double velocity_l2_error(const Vector& u, const Discretization& d,
                         const ManufacturedCase& mcase, double t);

/// log2(e_l / e_{l+1}) for consecutive levels; +inf where the next error
/// vanishes.
std::vector<double> convergence_rates(const std::vector<double>& errors);

/// Relative residual of the discrete energy identity for the BDF2 steps
/// (k >= 2) of a force-free run (f = 0, g = 0).
std::vector<double> energy_balance_residuals(const Trajectory& traj,
                                             const StepSystem& sys,
                                             const SolverParams& params);

}  // namespace surfnse
