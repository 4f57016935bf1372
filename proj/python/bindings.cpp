/// \file bindings.cpp
/// \brief Python bindings for the core operations.
#include <pybind11/functional.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "surfnse/diagnostics.hpp"
#include "surfnse/experiments.hpp"
#include "surfnse/vtk.hpp"

namespace py = pybind11;
using namespace surfnse;

PYBIND11_MODULE(_surfnse, m) {
  m.doc() = "Trace finite element method for the incompressible "
            "Navier-Stokes equations on a level-set surface";

  py::enum_<CaseId>(m, "CaseId")
      .value("exact1", CaseId::exact1)
      .value("sol2a", CaseId::sol2a)
      .value("sol2b", CaseId::sol2b)
      .value("killing", CaseId::killing);

  py::enum_<NonlinearForm>(m, "NonlinearForm")
      .value("convective", NonlinearForm::convective)
      .value("rotational", NonlinearForm::rotational)
      .value("none", NonlinearForm::none);

  py::enum_<SolverBackend>(m, "SolverBackend")
      .value("automatic", SolverBackend::automatic)
      .value("direct", SolverBackend::direct)
      .value("gmres", SolverBackend::gmres);

  m.def("killing_field", &killing_field, py::arg("x"));
  m.def("sol2a_kinetic_energy_reference", &sol2a_kinetic_energy_reference,
        py::arg("t"));

  py::class_<BackgroundMesh>(m, "BackgroundMesh")
      .def_readonly("level", &BackgroundMesh::level)
      .def_readonly("n", &BackgroundMesh::n)
      .def_readonly("h", &BackgroundMesh::h)
      .def_property_readonly(
          "n_vertices",
          [](const BackgroundMesh& mesh) { return mesh.vertices.size(); })
      .def_property_readonly("n_tets", [](const BackgroundMesh& mesh) {
        return mesh.tets.size();
      });
  m.def("build_background_mesh", &build_background_mesh, py::arg("level"));

  py::class_<Discretization>(m, "Discretization")
      .def_property_readonly(
          "mesh", [](const Discretization& d) { return d.mesh; })
      .def_property_readonly(
          "n_active_tets",
          [](const Discretization& d) { return d.active.tets.size(); })
      .def_property_readonly(
          "n_scalar_dofs",
          [](const Discretization& d) { return d.dofs.n_scalar; })
      .def_property_readonly("surface_area", [](const Discretization& d) {
        return d.surface.area();
      })
      .def_property_readonly("n_triangles", [](const Discretization& d) {
        return d.surface.triangles.size();
      });
  m.def("build_discretization", &build_discretization, py::arg("level"),
        py::arg("quad_degree") = 4);

  py::class_<ManufacturedCase>(m, "ManufacturedCase")
      .def_readonly("divergence_free", &ManufacturedCase::divergence_free)
      .def_readonly("zero_forcing", &ManufacturedCase::zero_forcing)
      .def("velocity", &ManufacturedCase::velocity, py::arg("x"), py::arg("t"))
      .def("pressure", &ManufacturedCase::pressure, py::arg("x"), py::arg("t"))
      .def("forcing", &ManufacturedCase::forcing, py::arg("x"), py::arg("t"),
           py::arg("nu"))
      .def("divergence", &ManufacturedCase::divergence, py::arg("x"),
           py::arg("t"));
  m.def("make_case", &make_case, py::arg("id"));

  py::class_<ExperimentConfig>(m, "ExperimentConfig")
      .def(py::init<>())
      .def_readwrite("levels", &ExperimentConfig::levels)
      .def_readwrite("level", &ExperimentConfig::level)
      .def_readwrite("nu", &ExperimentConfig::nu)
      .def_readwrite("case_id", &ExperimentConfig::case_id)
      .def_readwrite("form", &ExperimentConfig::form)
      .def_readwrite("dt", &ExperimentConfig::dt)
      .def_readwrite("t_end", &ExperimentConfig::t_end)
      .def_readwrite("tau", &ExperimentConfig::tau)
      .def_readwrite("tau_rule", &ExperimentConfig::tau_rule)
      .def_readwrite("tau_exponents", &ExperimentConfig::tau_exponents)
      .def_readwrite("quad_degree", &ExperimentConfig::quad_degree)
      .def_readwrite("backend", &ExperimentConfig::backend)
      .def_readwrite("out_dir", &ExperimentConfig::out_dir)
      .def_readwrite("vtk", &ExperimentConfig::vtk)
      .def_readwrite("allow_large", &ExperimentConfig::allow_large);

  py::class_<ErrorNorms>(m, "ErrorNorms")
      .def_readonly("linf_l2", &ErrorNorms::linf_l2)
      .def_readonly("l2_h1", &ErrorNorms::l2_h1)
      .def_readonly("l2_un", &ErrorNorms::l2_un)
      .def_readonly("l2_p", &ErrorNorms::l2_p);

  py::class_<ConvergenceRow>(m, "ConvergenceRow")
      .def_readonly("level", &ConvergenceRow::level)
      .def_readonly("h", &ConvergenceRow::h)
      .def_readonly("dt", &ConvergenceRow::dt)
      .def_readonly("tau", &ConvergenceRow::tau)
      .def_readonly("nu", &ConvergenceRow::nu)
      .def_readonly("errors", &ConvergenceRow::errors);

  py::class_<ConvergenceResult>(m, "ConvergenceResult")
      .def_readonly("rows", &ConvergenceResult::rows)
      .def_readonly("rate_linf_l2", &ConvergenceResult::rate_linf_l2)
      .def_readonly("rate_l2_h1", &ConvergenceResult::rate_l2_h1)
      .def_readonly("rate_l2_un", &ConvergenceResult::rate_l2_un)
      .def_readonly("rate_l2_p", &ConvergenceResult::rate_l2_p);

  py::class_<SweepRow>(m, "SweepRow")
      .def_readonly("tau", &SweepRow::tau)
      .def_readonly("err_linf_l2", &SweepRow::err_linf_l2)
      .def_readonly("err_l2_h1", &SweepRow::err_l2_h1)
      .def_readonly("err_l2_p", &SweepRow::err_l2_p);

  py::class_<EnergyRow>(m, "EnergyRow")
      .def_readonly("step", &EnergyRow::step)
      .def_readonly("time", &EnergyRow::time)
      .def_readonly("kinetic", &EnergyRow::kinetic)
      .def_readonly("kinetic_norm", &EnergyRow::kinetic_norm);

  m.def("run_convergence", &run_convergence, py::arg("config"));
  m.def("run_penalty_sweep", &run_penalty_sweep, py::arg("config"));
  m.def("run_energy", &run_energy, py::arg("config"));
  m.def("convergence_rates", &convergence_rates, py::arg("errors"));
}
