/// \file fe.hpp
/// \brief P1 bulk finite elements on the active strip: basis evaluation,
///        gradients, degree-of-freedom maps and nodal interpolation.
#pragma once

#include <array>
#include <functional>
#include <vector>

#include "surfnse/mesh.hpp"
#include "surfnse/types.hpp"

namespace surfnse {

/// Barycentric coordinates of x in the tetrahedron (sum to 1).
Eigen::Vector4d barycentric(const std::array<Vec3, 4>& tet, const Vec3& x);

/// Constant gradients of the four P1 basis functions.
std::array<Vec3, 4> p1_basis_gradients(const std::array<Vec3, 4>& tet);

double p1_eval(const std::array<Vec3, 4>& tet,
               const std::array<double, 4>& nodal_values, const Vec3& x);

Vec3 p1_gradient(const std::array<Vec3, 4>& tet,
                 const std::array<double, 4>& nodal_values);

/// Scalar dofs live at every vertex of an active tetrahedron. Velocity packs
/// 3 consecutive components per scalar dof; pressure reuses the scalar index.
struct DofMap {
  std::vector<int> active_vertices;  // scalar dof -> mesh vertex (ascending)
  std::vector<int> vertex_to_dof;    // mesh vertex -> scalar dof, -1 inactive
  int n_scalar = 0;

  int velocity_dof(int scalar, int component) const {
    return 3 * scalar + component;
  }
  int n_velocity() const { return 3 * n_scalar; }
  int n_pressure() const { return n_scalar; }
};

DofMap build_dof_map(const BackgroundMesh& mesh, const ActiveSet& active);

/// Nodal coefficient vector over the active strip; `components` is 1 or 3.
struct FEField {
  int components = 1;
  Vector values;
};

/// P1 Lagrange interpolant of a vector field given at vertex positions.
/// Throws if the function reports itself undefined (returns non-finite) at a
/// vertex.
FEField interpolate_velocity(const BackgroundMesh& mesh, const DofMap& dofs,
                             const std::function<Vec3(const Vec3&)>& f);

FEField interpolate_pressure(const BackgroundMesh& mesh, const DofMap& dofs,
                             const std::function<double(const Vec3&)>& f);

/// Value of a 3-component FE field inside tet `t` at x.
Vec3 eval_velocity(const BackgroundMesh& mesh, const DofMap& dofs,
                   const Vector& values, int t, const Vec3& x);

/// Full (constant) 3x3 Jacobian of a 3-component FE field on tet `t`;
/// row a, column b holds d u_a / d x_b.
Mat3 velocity_jacobian(const BackgroundMesh& mesh, const DofMap& dofs,
                       const Vector& values, int t);

}  // namespace surfnse
