#include "surfnse/fe.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "surfnse/quadrature.hpp"

namespace surfnse {

Eigen::Vector4d barycentric(const std::array<Vec3, 4>& tet, const Vec3& x) {
  Mat3 d;
  d.col(0) = tet[1] - tet[0];
  d.col(1) = tet[2] - tet[0];
  d.col(2) = tet[3] - tet[0];
  const Vec3 l = d.inverse() * (x - tet[0]);
  return {1.0 - l.sum(), l[0], l[1], l[2]};
}

std::array<Vec3, 4> p1_basis_gradients(const std::array<Vec3, 4>& tet) {
  if (tet_volume(tet) <= 0.0)
    throw std::invalid_argument("p1_basis_gradients: degenerate tetrahedron");
  Mat3 d;
  d.col(0) = tet[1] - tet[0];
  d.col(1) = tet[2] - tet[0];
  d.col(2) = tet[3] - tet[0];
  const Mat3 dinv = d.inverse();
  std::array<Vec3, 4> g;
  for (int i = 0; i < 3; ++i) g[i + 1] = dinv.row(i);
  g[0] = -(g[1] + g[2] + g[3]);
  return g;
}

double p1_eval(const std::array<Vec3, 4>& tet,
               const std::array<double, 4>& nodal_values, const Vec3& x) {
  const Eigen::Vector4d l = barycentric(tet, x);
  double v = 0.0;
  for (int i = 0; i < 4; ++i) v += l[i] * nodal_values[i];
  return v;
}

Vec3 p1_gradient(const std::array<Vec3, 4>& tet,
                 const std::array<double, 4>& nodal_values) {
  const auto g = p1_basis_gradients(tet);
  Vec3 grad = Vec3::Zero();
  for (int i = 0; i < 4; ++i) grad += nodal_values[i] * g[i];
  return grad;
}

DofMap build_dof_map(const BackgroundMesh& mesh, const ActiveSet& active) {
  DofMap dofs;
  dofs.active_vertices = active.vertices;
  dofs.vertex_to_dof.assign(mesh.vertices.size(), -1);
  for (int s = 0; s < int(active.vertices.size()); ++s)
    dofs.vertex_to_dof[active.vertices[s]] = s;
  dofs.n_scalar = int(active.vertices.size());
  return dofs;
}

FEField interpolate_velocity(const BackgroundMesh& mesh, const DofMap& dofs,
                             const std::function<Vec3(const Vec3&)>& f) {
  FEField field;
  field.components = 3;
  field.values.resize(dofs.n_velocity());
  for (int s = 0; s < dofs.n_scalar; ++s) {
    const Vec3 v = f(mesh.vertices[dofs.active_vertices[s]]);
    if (!v.allFinite())
      throw std::domain_error("interpolate_velocity: undefined at vertex " +
                              std::to_string(dofs.active_vertices[s]));
    for (int c = 0; c < 3; ++c) field.values[dofs.velocity_dof(s, c)] = v[c];
  }
  return field;
}

FEField interpolate_pressure(const BackgroundMesh& mesh, const DofMap& dofs,
                             const std::function<double(const Vec3&)>& f) {
  FEField field;
  field.components = 1;
  field.values.resize(dofs.n_pressure());
  for (int s = 0; s < dofs.n_scalar; ++s) {
    const double v = f(mesh.vertices[dofs.active_vertices[s]]);
    if (!std::isfinite(v))
      throw std::domain_error("interpolate_pressure: undefined at vertex " +
                              std::to_string(dofs.active_vertices[s]));
    field.values[s] = v;
  }
  return field;
}

Vec3 eval_velocity(const BackgroundMesh& mesh, const DofMap& dofs,
                   const Vector& values, int t, const Vec3& x) {
  const auto pts = mesh.tet_points(t);
  const Eigen::Vector4d l = barycentric(pts, x);
  Vec3 u = Vec3::Zero();
  for (int i = 0; i < 4; ++i) {
    const int s = dofs.vertex_to_dof[mesh.tets[t][i]];
    for (int c = 0; c < 3; ++c) u[c] += l[i] * values[dofs.velocity_dof(s, c)];
  }
  return u;
}

Mat3 velocity_jacobian(const BackgroundMesh& mesh, const DofMap& dofs,
                       const Vector& values, int t) {
  const auto grads = p1_basis_gradients(mesh.tet_points(t));
  Mat3 jac = Mat3::Zero();
  for (int i = 0; i < 4; ++i) {
    const int s = dofs.vertex_to_dof[mesh.tets[t][i]];
    for (int c = 0; c < 3; ++c)
      jac.row(c) += values[dofs.velocity_dof(s, c)] * grads[i].transpose();
  }
  return jac;
}

}  // namespace surfnse
