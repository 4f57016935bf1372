/// \file cases.hpp
/// \brief Exact solutions on the unit sphere, the Killing field, and a
///        finite-difference oracle for tangential derivatives and the
///        momentum forcing of the strong form.
#pragma once

#include <functional>
#include <string>

#include "surfnse/types.hpp"

namespace surfnse {

enum class CaseId { exact1, sol2a, sol2b, killing };

CaseId case_from_string(const std::string& name);
std::string to_string(CaseId id);

/// Rigid rotation of the sphere about the z axis, scaled so the kinetic
/// energy of the field is 1: xi_z(x) = alpha (-y, x, 0), alpha = sqrt(3/4pi).
Vec3 killing_field(const Vec3& x);

/// Exact velocity/pressure pair defined on the unit sphere and extended to a
/// neighborhood along normals (evaluation at x/|x|). Tangential derivatives
/// and the momentum forcing are computed with 4th-order central differences
/// of the normal extension, step fd_step.
struct ManufacturedCase {
  CaseId id = CaseId::killing;
  bool divergence_free = true;
  bool zero_forcing = false;
  double fd_step = 1e-3;

  std::function<Vec3(const Vec3&, double)> velocity_on_sphere;
  std::function<double(const Vec3&, double)> pressure_on_sphere;
  std::function<Vec3(const Vec3&, double)> velocity_dt_on_sphere;  // analytic

  /// Normal extensions; x may be anywhere off the origin.
  Vec3 velocity(const Vec3& x, double t) const;
  double pressure(const Vec3& x, double t) const;
  Vec3 velocity_dt(const Vec3& x, double t) const;

  /// Full 3x3 Jacobian of the extended velocity, row a col b = d u_a / d x_b.
  Mat3 extension_jacobian(const Vec3& x, double t) const;

  /// Covariant derivative P grad(u^e) P at a sphere point (|x| = 1).
  Mat3 surface_gradient(const Vec3& x, double t) const;
  double divergence(const Vec3& x, double t) const;
  Vec3 surface_pressure_gradient(const Vec3& x, double t) const;

  /// Momentum forcing of the strong form at a sphere point:
  /// f = P [ du/dt + (grad_G u) u - nu P div_G E_s(u) + grad_G p ].
  Vec3 forcing(const Vec3& x, double t, double nu) const;

  /// Forcing at arbitrary points via normal extension (assembly entry point).
  Vec3 forcing_extended(const Vec3& x, double t, double nu) const;
};

ManufacturedCase make_case(CaseId id);

/// Analytic kinetic-energy curve of the sol2a flow,
/// E(t) = (2/35) (44 - 80 e^-t + 100 e^-2t).
double sol2a_kinetic_energy_reference(double t);

}  // namespace surfnse
