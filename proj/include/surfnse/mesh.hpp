/// \file mesh.hpp
/// \brief Structured tetrahedral background tessellation of the computational
///        box and selection of elements intersected by the discrete surface.
#pragma once

#include <array>
#include <span>
#include <vector>

#include "surfnse/types.hpp"

namespace surfnse {

/// Structured tessellation of the cube [-5/3, 5/3]^3: n^3 sub-cubes with
/// n = 2^(level+1), each split into 6 tetrahedra sharing the main diagonal,
/// so adjacent cubes have conforming faces. Immutable after construction.
struct BackgroundMesh {
  int level = 0;
  int n = 0;        // subdivisions per axis
  double h = 0.0;   // sub-cube edge length, (10/3)/n
  Vec3 origin;      // corner of the box
  double extent = 0.0;
  std::vector<Vec3> vertices;            // (n+1)^3, x fastest
  std::vector<std::array<int, 4>> tets;  // 6 n^3, positively oriented

  int vertex_index(int i, int j, int k) const {
    return i + (n + 1) * (j + (n + 1) * k);
  }
  std::array<Vec3, 4> tet_points(int t) const {
    const auto& tet = tets[t];
    return {vertices[tet[0]], vertices[tet[1]], vertices[tet[2]],
            vertices[tet[3]]};
  }
};

BackgroundMesh build_background_mesh(int level);

/// Elements cut by the zero level of the P1 level-set interpolant, plus the
/// vertices appearing in them. Both lists ascending.
struct ActiveSet {
  std::vector<int> tets;
  std::vector<int> vertices;

  bool empty() const { return tets.empty(); }
};

/// Nodal values exactly zero are treated as +delta0 so every vertex carries a
/// definite sign.
inline double snap_phi(double v) { return v == 0.0 ? 1e-14 : v; }

/// A tetrahedron is active iff its snapped nodal values change sign.
ActiveSet select_active_elements(const BackgroundMesh& mesh,
                                 std::span<const double> phi_nodal);

}  // namespace surfnse
