/// \file assembly.hpp
/// \brief Assembly of the discrete forms over the surface triangulation and
///        the active strip into sparse blocks and right-hand sides.
#pragma once

#include <string>

#include "surfnse/cases.hpp"
#include "surfnse/fe.hpp"
#include "surfnse/geometry.hpp"
#include "surfnse/sparse.hpp"

namespace surfnse {

enum class NonlinearForm { convective, rotational, none };

NonlinearForm form_from_string(const std::string& name);
std::string to_string(NonlinearForm form);

struct SolverParams {
  double nu = 1.0;
  double tau = 1.0;
  double rho_u = -1.0;  // negative: resolve to h
  double rho_p = -1.0;  // negative: resolve to h
  double dt = 0.1;
  double t_end = 1.0;
  int level = 1;
  NonlinearForm form = NonlinearForm::convective;
  CaseId case_id = CaseId::exact1;

  void validate() const;
  /// Fills rho_u, rho_p with the mesh size where unset.
  void resolve_defaults(double h);
};

/// Geometry and spaces for one refinement level; immutable once built.
struct Discretization {
  BackgroundMesh mesh;
  ActiveSet active;
  LevelSet levelset;
  SurfaceMesh surface;
  DofMap dofs;
};

Discretization build_discretization(int level, int surf_quad_degree = 4);

/// Time-independent assembled blocks of the step operator. Velocity blocks
/// are n_u x n_u with n_u = 3 n_scalar, pressure blocks n_p x n_p.
struct StepSystem {
  SparseMatrix mass;       // (u, v) on the discrete surface
  SparseMatrix visc;       // (E_s u, E_s v), unscaled
  SparseMatrix penalty;    // (u.n, v.n), unscaled
  SparseMatrix stab_u;     // ((grad u) n, (grad v) n) over the strip, unscaled
  SparseMatrix stiffness;  // nu*visc + tau*penalty + rho_u*stab_u
  SparseMatrix coupling;   // B: rows pressure, cols velocity
  SparseMatrix stab_p;     // s_h including the rho_p factor
  Vector mean;             // integrals of the pressure basis on the surface
  double surface_area = 0.0;
};

SparseMatrix assemble_mass(const Discretization& d);
SparseMatrix assemble_viscous(const Discretization& d,
                              const SolverParams& params);  // combined
SparseMatrix assemble_pressure_coupling(const Discretization& d);
SparseMatrix assemble_pressure_stab(const Discretization& d,
                                    const SolverParams& params);
SparseMatrix assemble_convection(const Discretization& d,
                                 const Vector& u_tilde, NonlinearForm form);
Vector assemble_momentum_rhs(const Discretization& d,
                             const ManufacturedCase& mcase, double t,
                             const SolverParams& params);
Vector assemble_continuity_rhs(const Discretization& d,
                               const ManufacturedCase& mcase, double t);
Vector assemble_mean_vector(const Discretization& d);

/// Unscaled parts of the velocity bilinear form, exposed for the energy
/// diagnostics.
SparseMatrix assemble_strain_part(const Discretization& d);
SparseMatrix assemble_penalty_part(const Discretization& d);
SparseMatrix assemble_normal_stab_part(const Discretization& d);

/// Assembles every time-independent block.
StepSystem assemble_system(const Discretization& d, const SolverParams& params);

}  // namespace surfnse
