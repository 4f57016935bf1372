#include "surfnse/mesh.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "surfnse/quadrature.hpp"

namespace surfnse {

BackgroundMesh build_background_mesh(int level) {
  if (level < 0) throw std::invalid_argument("build_background_mesh: level < 0");

  BackgroundMesh mesh;
  mesh.level = level;
  mesh.n = 1 << (level + 1);
  mesh.extent = 10.0 / 3.0;
  mesh.h = mesh.extent / mesh.n;
  mesh.origin = Vec3(-5.0 / 3.0, -5.0 / 3.0, -5.0 / 3.0);

  const int n = mesh.n;
  const std::size_t n_vertices = std::size_t(n + 1) * (n + 1) * (n + 1);
  const std::size_t n_tets = 6 * std::size_t(n) * n * n;
  if (n_vertices > 80'000'000 || n_tets > 400'000'000)
    throw std::runtime_error("build_background_mesh: level " +
                             std::to_string(level) + " requests " +
                             std::to_string(n_vertices) + " vertices / " +
                             std::to_string(n_tets) + " tets");
  mesh.vertices.reserve(n_vertices);
  mesh.tets.reserve(n_tets);

  for (int k = 0; k <= n; ++k)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= n; ++i)
        mesh.vertices.push_back(mesh.origin +
                                mesh.h * Vec3(double(i), double(j), double(k)));

  // Kuhn subdivision: walk from the cube's origin corner to the opposite one,
  // one axis per step; the 6 axis orderings give 6 tets sharing the diagonal.
  static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                  {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i)
        for (const auto& perm : perms) {
          int c[3] = {i, j, k};
          std::array<int, 4> tet;
          tet[0] = mesh.vertex_index(c[0], c[1], c[2]);
          for (int s = 0; s < 3; ++s) {
            c[perm[s]] += 1;
            tet[s + 1] = mesh.vertex_index(c[0], c[1], c[2]);
          }
          if (tet_volume({mesh.vertices[tet[0]], mesh.vertices[tet[1]],
                          mesh.vertices[tet[2]], mesh.vertices[tet[3]]}) < 0.0)
            std::swap(tet[2], tet[3]);
          mesh.tets.push_back(tet);
        }
  return mesh;
}

ActiveSet select_active_elements(const BackgroundMesh& mesh,
                                 std::span<const double> phi_nodal) {
  if (phi_nodal.size() != mesh.vertices.size())
    throw std::invalid_argument(
        "select_active_elements: phi_nodal size mismatch");

  ActiveSet active;
  std::vector<char> vertex_used(mesh.vertices.size(), 0);
  for (int t = 0; t < int(mesh.tets.size()); ++t) {
    bool has_neg = false, has_pos = false;
    for (int v : mesh.tets[t]) {
      (snap_phi(phi_nodal[v]) < 0.0 ? has_neg : has_pos) = true;
    }
    if (has_neg && has_pos) {
      active.tets.push_back(t);
      for (int v : mesh.tets[t]) vertex_used[v] = 1;
    }
  }
  for (int v = 0; v < int(vertex_used.size()); ++v)
    if (vertex_used[v]) active.vertices.push_back(v);
  return active;
}

}  // namespace surfnse
