/// \file vtk.hpp
/// \brief Legacy-VTK ASCII export of the discrete surface for inspection.
#pragma once

#include <string>

#include "surfnse/assembly.hpp"

namespace surfnse {

/// Triangle soup with per-cell area data.
void write_surface_vtk(const SurfaceMesh& surface, const std::string& path);

/// Same geometry with point-data velocity and pressure sampled from FE
/// fields (pressure may be empty).
void write_solution_vtk(const Discretization& d, const Vector& velocity,
                        const Vector& pressure, const std::string& path);

}  // namespace surfnse
