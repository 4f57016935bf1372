#include "surfnse/solver.hpp"

#include <Eigen/SparseLU>
#include <unsupported/Eigen/IterativeSolvers>

#include <cmath>
#include <limits>
#include <stdexcept>

namespace surfnse {

SolverBackend backend_from_string(const std::string& name) {
  if (name == "auto") return SolverBackend::automatic;
  if (name == "direct") return SolverBackend::direct;
  if (name == "gmres") return SolverBackend::gmres;
  throw std::invalid_argument("unknown solver backend '" + name + "'");
}

namespace {

using ColMajor = Eigen::SparseMatrix<double>;
using LU = Eigen::SparseLU<ColMajor>;

/// Right preconditioner reusing a factorization of the convection-free step
/// operator; the per-step matrix differs from it only by the (skew) C block.
class FrozenLUPreconditioner {
 public:
  FrozenLUPreconditioner() = default;
  void attach(const LU* lu) { lu_ = lu; }

  template <class MatType>
  FrozenLUPreconditioner& analyzePattern(const MatType&) { return *this; }
  template <class MatType>
  FrozenLUPreconditioner& factorize(const MatType&) { return *this; }
  template <class MatType>
  FrozenLUPreconditioner& compute(const MatType&) { return *this; }

  template <class Rhs>
  Vector solve(const Rhs& b) const {
    return lu_->solve(Vector(b));
  }
  Eigen::ComputationInfo info() const { return Eigen::Success; }

 private:
  const LU* lu_ = nullptr;
};

}  // namespace

struct SaddleSolver::Impl {
  const StepSystem* sys = nullptr;
  SolverBackend backend = SolverBackend::direct;
  int n_u = 0, n_p = 0, n_total = 0;

  // Convection-free operator for the current sigma.
  ColMajor base;
  double base_sigma = std::numeric_limits<double>::quiet_NaN();

  LU direct_lu;
  bool direct_valid = false;
  bool direct_has_convection = false;

  LU precond_lu;  // for GMRES; factored from `base` on first use
  double precond_sigma = std::numeric_limits<double>::quiet_NaN();

  void build_base(double sigma) {
    if (sigma == base_sigma && base.nonZeros() > 0) return;
    std::vector<Triplet> trip;
    const SparseMatrix velocity_block = sigma * sys->mass + sys->stiffness;
    trip.reserve(velocity_block.nonZeros() + 2 * sys->coupling.nonZeros() +
                 sys->stab_p.nonZeros() + 2 * n_p);
    for (int r = 0; r < velocity_block.outerSize(); ++r)
      for (SparseMatrix::InnerIterator it(velocity_block, r); it; ++it)
        trip.emplace_back(int(it.row()), int(it.col()), it.value());
    for (int r = 0; r < sys->coupling.outerSize(); ++r)
      for (SparseMatrix::InnerIterator it(sys->coupling, r); it; ++it) {
        trip.emplace_back(int(it.col()), n_u + int(it.row()), it.value());
        trip.emplace_back(n_u + int(it.row()), int(it.col()), it.value());
      }
    for (int r = 0; r < sys->stab_p.outerSize(); ++r)
      for (SparseMatrix::InnerIterator it(sys->stab_p, r); it; ++it)
        trip.emplace_back(n_u + int(it.row()), n_u + int(it.col()),
                          -it.value());
    for (int i = 0; i < n_p; ++i) {
      trip.emplace_back(n_u + i, n_u + n_p, sys->mean[i]);
      trip.emplace_back(n_u + n_p, n_u + i, sys->mean[i]);
    }
    base.resize(n_total, n_total);
    base.setFromTriplets(trip.begin(), trip.end());
    base_sigma = sigma;
    direct_valid = false;
  }

  ColMajor full_operator(const SparseMatrix* convection) const {
    if (!convection) return base;
    std::vector<Triplet> trip;
    trip.reserve(convection->nonZeros());
    for (int r = 0; r < convection->outerSize(); ++r)
      for (SparseMatrix::InnerIterator it(*convection, r); it; ++it)
        trip.emplace_back(int(it.row()), int(it.col()), it.value());
    ColMajor padded(n_total, n_total);
    padded.setFromTriplets(trip.begin(), trip.end());
    return base + padded;
  }
};

SaddleSolver::SaddleSolver(const StepSystem& system, SolverBackend backend,
                           int level)
    : impl_(std::make_unique<Impl>()) {
  impl_->sys = &system;
  impl_->n_u = int(system.mass.rows());
  impl_->n_p = int(system.stab_p.rows());
  impl_->n_total = impl_->n_u + impl_->n_p + 1;
  if (backend == SolverBackend::automatic)
    backend = level >= 3 ? SolverBackend::gmres : SolverBackend::direct;
  impl_->backend = backend;
}

SaddleSolver::~SaddleSolver() = default;
SaddleSolver::SaddleSolver(SaddleSolver&&) noexcept = default;
SaddleSolver& SaddleSolver::operator=(SaddleSolver&&) noexcept = default;

SolverBackend SaddleSolver::backend() const { return impl_->backend; }

SaddleSolution SaddleSolver::solve(double sigma,
                                   const SparseMatrix* convection,
                                   const Vector& rhs_u, const Vector& rhs_p) {
  Impl& s = *impl_;
  if (rhs_u.size() != s.n_u || rhs_p.size() != s.n_p)
    throw std::invalid_argument("SaddleSolver: rhs size mismatch");

  s.build_base(sigma);

  Vector rhs(s.n_total);
  rhs << rhs_u, rhs_p, 0.0;

  Vector x;
  int iterations = 0;
  ColMajor k_full;
  const bool has_convection = convection != nullptr;

  if (s.backend == SolverBackend::direct) {
    k_full = s.full_operator(convection);
    if (!s.direct_valid || has_convection || s.direct_has_convection) {
      s.direct_lu.compute(k_full);
      if (s.direct_lu.info() != Eigen::Success)
        throw std::runtime_error("SaddleSolver: singular factorization");
      s.direct_valid = true;
      s.direct_has_convection = has_convection;
    }
    x = s.direct_lu.solve(rhs);
  } else {
    // Freeze the preconditioner on the first operator seen (the BDF2
    // convection-free one in production runs); it stays valid for the nearby
    // per-step operators.
    if (std::isnan(s.precond_sigma)) {
      s.precond_lu.compute(s.base);
      if (s.precond_lu.info() != Eigen::Success)
        throw std::runtime_error(
            "SaddleSolver: singular preconditioner factorization");
      s.precond_sigma = s.base_sigma;
    }
    k_full = s.full_operator(convection);
    Eigen::GMRES<ColMajor, FrozenLUPreconditioner> gmres;
    gmres.set_restart(100);
    gmres.setMaxIterations(5000);
    gmres.setTolerance(1e-12);
    gmres.preconditioner().attach(&s.precond_lu);
    gmres.compute(k_full);
    x = gmres.solve(rhs);
    iterations = int(gmres.iterations());
  }

  SaddleSolution sol;
  const double rhs_norm = rhs.norm();
  sol.residual = rhs_norm > 0.0 ? (k_full * x - rhs).norm() / rhs_norm
                                : (k_full * x).norm();
  if (!x.allFinite() || sol.residual > 1e-10)
    throw std::runtime_error(
        "SaddleSolver: solve failed, relative residual = " +
        std::to_string(sol.residual) +
        (iterations ? " after " + std::to_string(iterations) + " iterations"
                    : std::string()));

  sol.u = x.head(s.n_u);
  sol.p = x.segment(s.n_u, s.n_p);
  sol.lambda = x[s.n_total - 1];
  sol.iterations = iterations;

  const double p_max = sol.p.size() ? sol.p.cwiseAbs().maxCoeff() : 0.0;
  const double p_mean = s.sys->mean.dot(sol.p);
  if (std::abs(p_mean) > 1e-9 * s.sys->surface_area * p_max + 1e-300)
    throw std::runtime_error(
        "SaddleSolver: pressure mean constraint violated: " +
        std::to_string(p_mean));
  return sol;
}

SaddleSolution solve_step(const StepSystem& system, double sigma,
                          const SparseMatrix* convection, const Vector& rhs_u,
                          const Vector& rhs_p, SolverBackend backend,
                          int level) {
  SaddleSolver solver(system, backend, level);
  return solver.solve(sigma, convection, rhs_u, rhs_p);
}

}  // namespace surfnse
