/// \file geometry.hpp
/// \brief Level-set representation, marching-tetrahedra extraction of the
///        piecewise-planar discrete surface, and normals reconstructed from
///        the per-element P2 interpolant gradient.
#pragma once

#include <array>
#include <functional>
#include <vector>

#include "surfnse/fe.hpp"
#include "surfnse/mesh.hpp"
#include "surfnse/types.hpp"

namespace surfnse {

/// Analytic level set together with its P1 nodal interpolant. The discrete
/// surface is the zero level of the P1 interpolant; normals come from the
/// gradient of a per-tet P2 interpolant of the same function.
struct LevelSet {
  std::function<double(const Vec3&)> phi;
  std::vector<double> p1_values;  // one per mesh vertex

  static LevelSet sphere(const BackgroundMesh& mesh);
  static LevelSet from_function(const BackgroundMesh& mesh,
                                std::function<double(const Vec3&)> phi);

  /// 10 nodal values on a tetrahedron: 4 vertices then the 6 edge midpoints
  /// in the order (0,1),(0,2),(0,3),(1,2),(1,3),(2,3).
  std::array<double, 10> p2_values(const BackgroundMesh& mesh, int tet) const;
};

/// Gradient of the quadratic interpolant with the nodal layout above.
Vec3 p2_gradient(const std::array<Vec3, 4>& tet,
                 const std::array<double, 10>& vals, const Vec3& x);

/// Zero-level triangles of the P1 interpolant restricted to one tetrahedron:
/// one triangle for the 1/3 sign pattern, two (split quad) for 2/2, none for
/// a uniform sign. Triangle vertices are ordered so the geometric normal
/// points toward increasing phi; slivers with area < 1e-14 h^2 are dropped.
std::vector<std::array<Vec3, 3>> cut_tetrahedron(
    const std::array<Vec3, 4>& tet_points, std::array<double, 4> phi_vals);

struct SurfaceTriangle {
  std::array<Vec3, 3> v;
  int parent_tet;  // background mesh tet index
  double area;
};

struct SurfaceQuadPoint {
  Vec3 x;
  double w;
  Vec3 normal;     // normalized P2 interpolant gradient of the parent tet
  int parent_tet;  // background mesh tet index
  int triangle;    // index into SurfaceMesh::triangles
};

struct SurfaceMesh {
  std::vector<SurfaceTriangle> triangles;
  std::vector<SurfaceQuadPoint> points;
  int quad_degree = 4;

  double area() const;
};

/// Throws if the active set is empty or |grad phi_h| < 1e-10 at a quadrature
/// point (unresolved geometry).
SurfaceMesh build_surface_mesh(const BackgroundMesh& mesh,
                               const ActiveSet& active, const LevelSet& ls,
                               int quad_degree = 4);

}  // namespace surfnse
