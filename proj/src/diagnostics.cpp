#include "surfnse/diagnostics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace surfnse {

double kinetic_energy(const Vector& u, const SparseMatrix& mass) {
  if (u.size() != mass.cols())
    throw std::invalid_argument("kinetic_energy: size mismatch");
  return 0.5 * u.dot(mass * u);
}

namespace {

struct StepIntegrals {
  double err_l2 = 0.0;   // |u - u_h|^2
  double err_h1 = 0.0;   // |u - u_h|^2 + |grad_G (u - u_h)|^2
  double u_n = 0.0;      // |u_h . n_h|^2
  double err_p = 0.0;    // mean-shifted |p - p_h|^2
};

/// Surface integrals of one time level. The exact gradient comes from the
/// finite-difference Jacobian of the normal extension, sandwiched with the
/// discrete projector, so both fields are measured in the same metric.
StepIntegrals step_integrals(const Vector& u_h, const Vector* p_h,
                             const Discretization& d,
                             const ManufacturedCase& mcase, double t,
                             double area, const Vector& mean_vec) {
  StepIntegrals out;

  double p_h_mean = 0.0;
  double p_ex_mean = 0.0;
  if (p_h) {
    p_h_mean = mean_vec.dot(*p_h) / area;
    for (const auto& q : d.surface.points)
      p_ex_mean += q.w * mcase.pressure(q.x, t);
    p_ex_mean /= area;
  }

  int tet = -1;
  std::array<Vec3, 4> grads;
  std::array<int, 4> dofs{};
  std::array<Vec3, 4> tet_pts;
  Mat3 jac_h = Mat3::Zero();

  for (const auto& q : d.surface.points) {
    if (q.parent_tet != tet) {
      tet = q.parent_tet;
      tet_pts = d.mesh.tet_points(tet);
      grads = p1_basis_gradients(tet_pts);
      jac_h = Mat3::Zero();
      for (int i = 0; i < 4; ++i) {
        dofs[i] = d.dofs.vertex_to_dof[d.mesh.tets[tet][i]];
        for (int c = 0; c < 3; ++c)
          jac_h.row(c) += u_h[d.dofs.velocity_dof(dofs[i], c)] *
                          grads[i].transpose();
      }
    }
    const Eigen::Vector4d l = barycentric(tet_pts, q.x);
    Vec3 uh = Vec3::Zero();
    double ph = 0.0;
    for (int i = 0; i < 4; ++i) {
      for (int c = 0; c < 3; ++c)
        uh[c] += l[i] * u_h[d.dofs.velocity_dof(dofs[i], c)];
      if (p_h) ph += l[i] * (*p_h)[dofs[i]];
    }

    const Vec3 u_ex = mcase.velocity(q.x, t);
    const Vec3 diff = u_ex - uh;
    out.err_l2 += q.w * diff.squaredNorm();
    out.u_n += q.w * std::pow(uh.dot(q.normal), 2);

    const Mat3 proj = tangential_projector(q.normal);
    const Mat3 grad_diff =
        proj * (mcase.extension_jacobian(q.x, t) - jac_h) * proj;
    out.err_h1 += q.w * (diff.squaredNorm() + grad_diff.squaredNorm());

    if (p_h) {
      const double pd =
          (mcase.pressure(q.x, t) - p_ex_mean) - (ph - p_h_mean);
      out.err_p += q.w * pd * pd;
    }
  }
  return out;
}

}  // namespace

double velocity_l2_error(const Vector& u, const Discretization& d,
                         const ManufacturedCase& mcase, double t) {
  const Vector mean;  // unused without pressure
  const auto ints = step_integrals(u, nullptr, d, mcase, t, 1.0, mean);
  return std::sqrt(ints.err_l2);
}

ErrorNorms error_norms(const Trajectory& traj, const Discretization& d,
                       const ManufacturedCase& mcase) {
  if (traj.u.empty()) throw std::invalid_argument("error_norms: empty run");
  const Vector mean_vec = assemble_mean_vector(d);
  const double area = d.surface.area();
  const double dt = traj.dt;

  ErrorNorms norms;
  double sum_h1 = 0.0, sum_un = 0.0, sum_p = 0.0;
  for (int k = 0; k < int(traj.u.size()); ++k) {
    const double t = k * dt;
    const Vector* p_h = (k > 0 && traj.p[k].size()) ? &traj.p[k] : nullptr;
    const auto ints =
        step_integrals(traj.u[k], p_h, d, mcase, t, area, mean_vec);
    norms.linf_l2 = std::max(norms.linf_l2, std::sqrt(ints.err_l2));
    if (k > 0) {
      sum_h1 += dt * ints.err_h1;
      sum_un += dt * ints.u_n;
      sum_p += dt * ints.err_p;
    }
  }
  norms.l2_h1 = std::sqrt(sum_h1);
  norms.l2_un = std::sqrt(sum_un);
  norms.l2_p = std::sqrt(sum_p);
  return norms;
}

std::vector<double> convergence_rates(const std::vector<double>& errors) {
  std::vector<double> rates;
  for (std::size_t i = 0; i + 1 < errors.size(); ++i) {
    if (errors[i + 1] == 0.0)
      rates.push_back(std::numeric_limits<double>::infinity());
    else
      rates.push_back(std::log2(errors[i] / errors[i + 1]));
  }
  return rates;
}

std::vector<double> energy_balance_residuals(const Trajectory& traj,
                                             const StepSystem& sys,
                                             const SolverParams& params) {
  SolverParams p = params;
  p.validate();
  const double dt = traj.dt;
  auto msq = [&](const Vector& v) { return v.dot(sys.mass * v); };

  std::vector<double> residuals;
  for (int k = 2; k < int(traj.u.size()); ++k) {
    const Vector& uk = traj.u[k];
    const Vector& u1 = traj.u[k - 1];
    const Vector& u2 = traj.u[k - 2];

    const Vector utilde_next = 2.0 * uk - u1;
    const Vector utilde = 2.0 * u1 - u2;
    const Vector utt = (uk - 2.0 * u1 + u2) / (dt * dt);

    const double terms[] = {
        (msq(uk) + utilde_next.dot(sys.mass * utilde_next)) / (4.0 * dt),
        p.nu * uk.dot(sys.visc * uk),
        p.tau * uk.dot(sys.penalty * uk),
        p.rho_u * uk.dot(sys.stab_u * uk),
        std::pow(dt, 3) / 4.0 * msq(utt),
        traj.p[k].dot(sys.stab_p * traj.p[k]),
        -(msq(u1) + utilde.dot(sys.mass * utilde)) / (4.0 * dt),
    };
    double lhs = 0.0, scale = 0.0;
    for (double term : terms) {
      lhs += term;
      scale += std::abs(term);
    }
    residuals.push_back(scale > 0.0 ? std::abs(lhs) / scale : 0.0);
  }
  return residuals;
}

}  // namespace surfnse
