#include "surfnse/vtk.hpp"

#include <fstream>
#include <stdexcept>

namespace surfnse {

namespace {

std::ofstream open_vtk(const std::string& path, std::size_t n_triangles) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out.precision(12);
  out << "# vtk DataFile Version 3.0\n"
      << "surfnse discrete surface\n"
      << "ASCII\n"
      << "DATASET UNSTRUCTURED_GRID\n"
      << "POINTS " << 3 * n_triangles << " double\n";
  return out;
}

void write_cells(std::ofstream& out, std::size_t n_triangles) {
  out << "CELLS " << n_triangles << " " << 4 * n_triangles << "\n";
  for (std::size_t t = 0; t < n_triangles; ++t)
    out << "3 " << 3 * t << " " << 3 * t + 1 << " " << 3 * t + 2 << "\n";
  out << "CELL_TYPES " << n_triangles << "\n";
  for (std::size_t t = 0; t < n_triangles; ++t) out << "5\n";
}

}  // namespace

void write_surface_vtk(const SurfaceMesh& surface, const std::string& path) {
  auto out = open_vtk(path, surface.triangles.size());
  for (const auto& tri : surface.triangles)
    for (const auto& v : tri.v)
      out << v[0] << " " << v[1] << " " << v[2] << "\n";
  write_cells(out, surface.triangles.size());
  out << "CELL_DATA " << surface.triangles.size() << "\n"
      << "SCALARS area double 1\nLOOKUP_TABLE default\n";
  for (const auto& tri : surface.triangles) out << tri.area << "\n";
}

void write_solution_vtk(const Discretization& d, const Vector& velocity,
                        const Vector& pressure, const std::string& path) {
  const auto& surface = d.surface;
  auto out = open_vtk(path, surface.triangles.size());
  for (const auto& tri : surface.triangles)
    for (const auto& v : tri.v)
      out << v[0] << " " << v[1] << " " << v[2] << "\n";
  write_cells(out, surface.triangles.size());

  out << "CELL_DATA " << surface.triangles.size() << "\n"
      << "SCALARS area double 1\nLOOKUP_TABLE default\n";
  for (const auto& tri : surface.triangles) out << tri.area << "\n";

  out << "POINT_DATA " << 3 * surface.triangles.size() << "\n"
      << "VECTORS velocity double\n";
  for (const auto& tri : surface.triangles)
    for (const auto& v : tri.v) {
      const Vec3 u = eval_velocity(d.mesh, d.dofs, velocity, tri.parent_tet, v);
      out << u[0] << " " << u[1] << " " << u[2] << "\n";
    }

  out << "SCALARS pressure double 1\nLOOKUP_TABLE default\n";
  for (const auto& tri : surface.triangles) {
    const auto pts = d.mesh.tet_points(tri.parent_tet);
    for (const auto& v : tri.v) {
      double p = 0.0;
      if (pressure.size()) {
        const Eigen::Vector4d l = barycentric(pts, v);
        for (int i = 0; i < 4; ++i)
          p += l[i] *
               pressure[d.dofs.vertex_to_dof[d.mesh.tets[tri.parent_tet][i]]];
      }
      out << p << "\n";
    }
  }
}

}  // namespace surfnse
