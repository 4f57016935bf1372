/// \file solver.hpp
/// \brief Per-step saddle-point solve with a Lagrange-multiplier mean-zero
///        pressure constraint; direct factorization and preconditioned GMRES
///        backends.
#pragma once

#include <memory>
#include <string>

#include "surfnse/assembly.hpp"

namespace surfnse {

enum class SolverBackend { automatic, direct, gmres };

SolverBackend backend_from_string(const std::string& name);

struct SaddleSolution {
  Vector u;
  Vector p;
  double lambda = 0.0;
  double residual = 0.0;  // relative, after the solve
  int iterations = 0;     // 0 for the direct backend
};

/// Step operator
///   [ sigma M + A + C   B^T   0 ] [u]   [rhs_u]
///   [ B                 -S    m ] [p] = [rhs_p]
///   [ 0                 m^T   0 ] [l]   [0    ]
/// with sigma the BDF mass coefficient. Solutions satisfy
/// |K x - b| / |b| <= 1e-10 and |m . p| <= 1e-9 area max|p|.
class SaddleSolver {
 public:
  SaddleSolver(const StepSystem& system, SolverBackend backend, int level);
  ~SaddleSolver();
  SaddleSolver(SaddleSolver&&) noexcept;
  SaddleSolver& operator=(SaddleSolver&&) noexcept;

  /// `convection` may be null (Stokes step). Throws on non-convergence,
  /// singular factorization, or a violated solution invariant.
  SaddleSolution solve(double sigma, const SparseMatrix* convection,
                       const Vector& rhs_u, const Vector& rhs_p);

  SolverBackend backend() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

SaddleSolution solve_step(const StepSystem& system, double sigma,
                          const SparseMatrix* convection, const Vector& rhs_u,
                          const Vector& rhs_p,
                          SolverBackend backend = SolverBackend::direct,
                          int level = 0);

}  // namespace surfnse
