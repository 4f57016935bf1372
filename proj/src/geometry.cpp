#include "surfnse/geometry.hpp"

#include <algorithm>
#include <stdexcept>

#include "surfnse/quadrature.hpp"

namespace surfnse {

LevelSet LevelSet::from_function(const BackgroundMesh& mesh,
                                 std::function<double(const Vec3&)> phi) {
  LevelSet ls;
  ls.phi = std::move(phi);
  ls.p1_values.resize(mesh.vertices.size());
  for (std::size_t v = 0; v < mesh.vertices.size(); ++v)
    ls.p1_values[v] = ls.phi(mesh.vertices[v]);
  return ls;
}

LevelSet LevelSet::sphere(const BackgroundMesh& mesh) {
  return from_function(mesh, [](const Vec3& x) { return x.norm() - 1.0; });
}

namespace {
constexpr int kEdgeNodes[6][2] = {{0, 1}, {0, 2}, {0, 3},
                                  {1, 2}, {1, 3}, {2, 3}};
}

std::array<double, 10> LevelSet::p2_values(const BackgroundMesh& mesh,
                                           int tet) const {
  const auto pts = mesh.tet_points(tet);
  std::array<double, 10> vals;
  for (int i = 0; i < 4; ++i) vals[i] = phi(pts[i]);
  for (int e = 0; e < 6; ++e)
    vals[4 + e] = phi(0.5 * (pts[kEdgeNodes[e][0]] + pts[kEdgeNodes[e][1]]));
  return vals;
}

Vec3 p2_gradient(const std::array<Vec3, 4>& tet,
                 const std::array<double, 10>& vals, const Vec3& x) {
  const Eigen::Vector4d l = barycentric(tet, x);
  const auto gl = p1_basis_gradients(tet);
  Vec3 g = Vec3::Zero();
  for (int i = 0; i < 4; ++i) g += vals[i] * (4.0 * l[i] - 1.0) * gl[i];
  for (int e = 0; e < 6; ++e) {
    const int i = kEdgeNodes[e][0], j = kEdgeNodes[e][1];
    g += 4.0 * vals[4 + e] * (l[i] * gl[j] + l[j] * gl[i]);
  }
  return g;
}

namespace {

Vec3 edge_cut(const Vec3& pi, const Vec3& pj, double fi, double fj) {
  const double t = fi / (fi - fj);
  return pi + t * (pj - pi);
}

void orient_toward_gradient(std::array<Vec3, 3>& tri, const Vec3& grad) {
  if ((tri[1] - tri[0]).cross(tri[2] - tri[0]).dot(grad) < 0.0)
    std::swap(tri[1], tri[2]);
}

}  // namespace

std::vector<std::array<Vec3, 3>> cut_tetrahedron(
    const std::array<Vec3, 4>& tet_points, std::array<double, 4> phi_vals) {
  for (double& v : phi_vals) v = snap_phi(v);

  std::array<int, 4> neg{}, pos{};
  int n_neg = 0, n_pos = 0;
  for (int i = 0; i < 4; ++i)
    (phi_vals[i] < 0.0 ? neg[n_neg++] : pos[n_pos++]) = i;
  if (n_neg == 0 || n_pos == 0) return {};

  double h = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      h = std::max(h, (tet_points[i] - tet_points[j]).norm());
  const double min_area = 1e-14 * h * h;

  const Vec3 grad =
      p1_gradient(tet_points, {phi_vals[0], phi_vals[1], phi_vals[2], phi_vals[3]});

  auto cut = [&](int i, int j) {
    return edge_cut(tet_points[i], tet_points[j], phi_vals[i], phi_vals[j]);
  };

  std::vector<std::array<Vec3, 3>> tris;
  auto emit = [&](std::array<Vec3, 3> tri) {
    if (triangle_area(tri[0], tri[1], tri[2]) < min_area) return;
    orient_toward_gradient(tri, grad);
    tris.push_back(tri);
  };

  if (n_neg == 1 || n_pos == 1) {
    const int apex = (n_neg == 1) ? neg[0] : pos[0];
    const auto& other = (n_neg == 1) ? pos : neg;
    emit({cut(apex, other[0]), cut(apex, other[1]), cut(apex, other[2])});
  } else {
    // 2/2 pattern: quad cycle with consecutive corners sharing a tet vertex.
    const std::array<Vec3, 4> q = {cut(neg[0], pos[0]), cut(neg[0], pos[1]),
                                   cut(neg[1], pos[1]), cut(neg[1], pos[0])};
    if ((q[0] - q[2]).squaredNorm() <= (q[1] - q[3]).squaredNorm()) {
      emit({q[0], q[1], q[2]});
      emit({q[0], q[2], q[3]});
    } else {
      emit({q[1], q[2], q[3]});
      emit({q[1], q[3], q[0]});
    }
  }
  return tris;
}

double SurfaceMesh::area() const {
  double a = 0.0;
  for (const auto& t : triangles) a += t.area;
  return a;
}

SurfaceMesh build_surface_mesh(const BackgroundMesh& mesh,
                               const ActiveSet& active, const LevelSet& ls,
                               int quad_degree) {
  if (active.empty())
    throw std::invalid_argument("build_surface_mesh: empty active set");

  SurfaceMesh surface;
  surface.quad_degree = quad_degree;
  for (int t : active.tets) {
    const auto pts = mesh.tet_points(t);
    std::array<double, 4> phi;
    for (int i = 0; i < 4; ++i) phi[i] = ls.p1_values[mesh.tets[t][i]];
    const auto tris = cut_tetrahedron(pts, phi);
    if (tris.empty()) continue;
    const auto p2 = ls.p2_values(mesh, t);
    for (const auto& tri : tris) {
      const int tri_index = int(surface.triangles.size());
      surface.triangles.push_back(
          {tri, t, triangle_area(tri[0], tri[1], tri[2])});
      for (const auto& q : triangle_quadrature(tri[0], tri[1], tri[2],
                                               quad_degree)) {
        Vec3 g = p2_gradient(pts, p2, q.x);
        const double norm = g.norm();
        if (norm < 1e-10)
          throw std::runtime_error(
              "build_surface_mesh: vanishing level-set gradient (unresolved "
              "geometry) in tet " + std::to_string(t));
        surface.points.push_back({q.x, q.w, g / norm, t, tri_index});
      }
    }
  }
  return surface;
}

}  // namespace surfnse
