/// \file quadrature.hpp
/// \brief Symmetric quadrature rules on triangles and tetrahedra.
#pragma once

#include <array>
#include <vector>

#include "surfnse/types.hpp"

namespace surfnse {

struct QuadPoint {
  Vec3 x;
  double w;
};

/// Rule on a physical triangle, exact for polynomials up to `degree`
/// (supported: 1, 2, 4, 6). Weights sum to the triangle area.
std::vector<QuadPoint> triangle_quadrature(const Vec3& a, const Vec3& b,
                                           const Vec3& c, int degree);

/// Rule on a physical tetrahedron, exact up to `degree` (supported: 1, 2, 3).
/// Weights sum to the tetrahedron volume.
std::vector<QuadPoint> volume_quadrature(const std::array<Vec3, 4>& tet,
                                         int degree);

double triangle_area(const Vec3& a, const Vec3& b, const Vec3& c);
double tet_volume(const std::array<Vec3, 4>& tet);  // signed

}  // namespace surfnse
