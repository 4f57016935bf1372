#include "surfnse/assembly.hpp"

#include <stdexcept>

#include "surfnse/quadrature.hpp"

namespace surfnse {

NonlinearForm form_from_string(const std::string& name) {
  if (name == "convective") return NonlinearForm::convective;
  if (name == "rotational") return NonlinearForm::rotational;
  if (name == "none") return NonlinearForm::none;
  throw std::invalid_argument("unknown nonlinear form '" + name + "'");
}

std::string to_string(NonlinearForm form) {
  switch (form) {
    case NonlinearForm::convective: return "convective";
    case NonlinearForm::rotational: return "rotational";
    case NonlinearForm::none: return "none";
  }
  return "?";
}

void SolverParams::validate() const {
  if (nu < 0.0) throw std::invalid_argument("params: nu < 0");
  if (tau <= 0.0) throw std::invalid_argument("params: tau <= 0");
  if (rho_u < 0.0) throw std::invalid_argument("params: rho_u unresolved");
  if (rho_p <= 0.0) throw std::invalid_argument("params: rho_p unresolved");
  if (dt <= 0.0) throw std::invalid_argument("params: dt <= 0");
}

void SolverParams::resolve_defaults(double h) {
  if (rho_u < 0.0) rho_u = h;
  if (rho_p <= 0.0) rho_p = h;
}

Discretization build_discretization(int level, int surf_quad_degree) {
  Discretization d;
  d.mesh = build_background_mesh(level);
  d.levelset = LevelSet::sphere(d.mesh);
  d.active = select_active_elements(d.mesh, d.levelset.p1_values);
  if (d.active.empty())
    throw std::runtime_error("build_discretization: surface misses the mesh");
  d.surface = build_surface_mesh(d.mesh, d.active, d.levelset, surf_quad_degree);
  d.dofs = build_dof_map(d.mesh, d.active);
  return d;
}

namespace {

/// Per-element data shared by all surface integrals on one triangle.
struct TriangleContext {
  std::array<int, 4> scalar_dof;
  std::array<Vec3, 4> grad;      // P1 basis gradients of the parent tet
  const SurfaceQuadPoint* pts;   // quadrature points of this triangle
  int n_pts;
};

class SurfaceLoop {
 public:
  explicit SurfaceLoop(const Discretization& d) : d_(d) {
    n_pts_per_tri_ = int(d.surface.points.size() / d.surface.triangles.size());
  }

  template <class Body>  // Body(const TriangleContext&, buffer)
  std::vector<Triplet> assemble(const Body& body) const {
    return assemble_triplets(
        int(d_.surface.triangles.size()),
        [&](int tri, std::vector<Triplet>& buf) { body(context(tri), buf); });
  }

  template <class Body>  // Body(const TriangleContext&, Vector&)
  Vector accumulate(int size, const Body& body) const {
    Vector out = Vector::Zero(size);
    for (int tri = 0; tri < int(d_.surface.triangles.size()); ++tri)
      body(context(tri), out);
    return out;
  }

  TriangleContext context(int tri) const {
    TriangleContext ctx;
    const int tet = d_.surface.triangles[tri].parent_tet;
    const auto pts = d_.mesh.tet_points(tet);
    ctx.grad = p1_basis_gradients(pts);
    for (int i = 0; i < 4; ++i)
      ctx.scalar_dof[i] = d_.dofs.vertex_to_dof[d_.mesh.tets[tet][i]];
    ctx.pts = d_.surface.points.data() + std::size_t(tri) * n_pts_per_tri_;
    ctx.n_pts = n_pts_per_tri_;
    return ctx;
  }

 private:
  const Discretization& d_;
  int n_pts_per_tri_;
};

std::array<double, 4> basis_values(const Discretization& d,
                                   const SurfaceQuadPoint& q) {
  const Eigen::Vector4d l = barycentric(d.mesh.tet_points(q.parent_tet), q.x);
  return {l[0], l[1], l[2], l[3]};
}

}  // namespace

SparseMatrix assemble_mass(const Discretization& d) {
  const int n_u = d.dofs.n_velocity();
  SurfaceLoop loop(d);
  auto triplets = loop.assemble([&](const TriangleContext& ctx,
                                    std::vector<Triplet>& buf) {
    double local[4][4] = {};
    for (int q = 0; q < ctx.n_pts; ++q) {
      const auto& p = ctx.pts[q];
      const auto psi = basis_values(d, p);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) local[i][j] += p.w * psi[i] * psi[j];
    }
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        for (int c = 0; c < 3; ++c)
          buf.emplace_back(d.dofs.velocity_dof(ctx.scalar_dof[i], c),
                           d.dofs.velocity_dof(ctx.scalar_dof[j], c),
                           local[i][j]);
  });
  return from_triplets(n_u, n_u, triplets);
}

SparseMatrix assemble_strain_part(const Discretization& d) {
  const int n_u = d.dofs.n_velocity();
  SurfaceLoop loop(d);
  auto triplets = loop.assemble([&](const TriangleContext& ctx,
                                    std::vector<Triplet>& buf) {
    Eigen::Matrix<double, 12, 12> local = Eigen::Matrix<double, 12, 12>::Zero();
    for (int q = 0; q < ctx.n_pts; ++q) {
      const auto& p = ctx.pts[q];
      const Mat3 proj = tangential_projector(p.normal);
      std::array<Vec3, 4> pg;  // projected basis gradients
      for (int i = 0; i < 4; ++i) pg[i] = proj * ctx.grad[i];
      // E_s(psi_j e_b) = (P e_b (P grad_j)^T + sym)/2; the Frobenius product
      // of two such rank-2 symmetric tensors reduces to dot products.
      for (int i = 0; i < 4; ++i)
        for (int a = 0; a < 3; ++a)
          for (int j = 0; j < 4; ++j)
            for (int b = 0; b < 3; ++b) {
              const double v =
                  0.5 * (proj(a, b) * pg[i].dot(pg[j]) +
                         pg[j][a] * pg[i][b]);
              local(3 * i + a, 3 * j + b) += p.w * v;
            }
    }
    for (int i = 0; i < 4; ++i)
      for (int a = 0; a < 3; ++a)
        for (int j = 0; j < 4; ++j)
          for (int b = 0; b < 3; ++b)
            buf.emplace_back(d.dofs.velocity_dof(ctx.scalar_dof[i], a),
                             d.dofs.velocity_dof(ctx.scalar_dof[j], b),
                             local(3 * i + a, 3 * j + b));
  });
  return from_triplets(n_u, n_u, triplets);
}

SparseMatrix assemble_penalty_part(const Discretization& d) {
  const int n_u = d.dofs.n_velocity();
  SurfaceLoop loop(d);
  auto triplets = loop.assemble([&](const TriangleContext& ctx,
                                    std::vector<Triplet>& buf) {
    Eigen::Matrix<double, 12, 12> local = Eigen::Matrix<double, 12, 12>::Zero();
    for (int q = 0; q < ctx.n_pts; ++q) {
      const auto& p = ctx.pts[q];
      const auto psi = basis_values(d, p);
      for (int i = 0; i < 4; ++i)
        for (int a = 0; a < 3; ++a)
          for (int j = 0; j < 4; ++j)
            for (int b = 0; b < 3; ++b)
              local(3 * i + a, 3 * j + b) +=
                  p.w * psi[i] * psi[j] * p.normal[a] * p.normal[b];
    }
    for (int i = 0; i < 4; ++i)
      for (int a = 0; a < 3; ++a)
        for (int j = 0; j < 4; ++j)
          for (int b = 0; b < 3; ++b)
            buf.emplace_back(d.dofs.velocity_dof(ctx.scalar_dof[i], a),
                             d.dofs.velocity_dof(ctx.scalar_dof[j], b),
                             local(3 * i + a, 3 * j + b));
  });
  return from_triplets(n_u, n_u, triplets);
}

SparseMatrix assemble_normal_stab_part(const Discretization& d) {
  const int n_u = d.dofs.n_velocity();
  auto triplets = assemble_triplets(
      int(d.active.tets.size()), [&](int k, std::vector<Triplet>& buf) {
        const int tet = d.active.tets[k];
        const auto pts = d.mesh.tet_points(tet);
        const auto grad = p1_basis_gradients(pts);
        const auto p2 = d.levelset.p2_values(d.mesh, tet);
        std::array<int, 4> dof;
        for (int i = 0; i < 4; ++i)
          dof[i] = d.dofs.vertex_to_dof[d.mesh.tets[tet][i]];

        double local[4][4] = {};
        for (const auto& q : volume_quadrature(pts, 2)) {
          Vec3 g = p2_gradient(pts, p2, q.x);
          const double norm = g.norm();
          if (norm < 1e-10)
            throw std::runtime_error(
                "assemble_normal_stab_part: vanishing level-set gradient");
          g /= norm;
          double dn[4];
          for (int i = 0; i < 4; ++i) dn[i] = grad[i].dot(g);
          for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) local[i][j] += q.w * dn[i] * dn[j];
        }
        for (int i = 0; i < 4; ++i)
          for (int j = 0; j < 4; ++j)
            for (int c = 0; c < 3; ++c)
              buf.emplace_back(d.dofs.velocity_dof(dof[i], c),
                               d.dofs.velocity_dof(dof[j], c), local[i][j]);
      });
  return from_triplets(n_u, n_u, triplets);
}

SparseMatrix assemble_viscous(const Discretization& d,
                              const SolverParams& params) {
  SolverParams p = params;
  p.resolve_defaults(d.mesh.h);
  p.validate();
  SparseMatrix a = p.nu * assemble_strain_part(d);
  a += p.tau * assemble_penalty_part(d);
  a += p.rho_u * assemble_normal_stab_part(d);
  return a;
}

SparseMatrix assemble_pressure_coupling(const Discretization& d) {
  const int n_p = d.dofs.n_pressure();
  const int n_u = d.dofs.n_velocity();
  SurfaceLoop loop(d);
  auto triplets = loop.assemble([&](const TriangleContext& ctx,
                                    std::vector<Triplet>& buf) {
    Eigen::Matrix<double, 4, 12> local = Eigen::Matrix<double, 4, 12>::Zero();
    for (int q = 0; q < ctx.n_pts; ++q) {
      const auto& p = ctx.pts[q];
      const Mat3 proj = tangential_projector(p.normal);
      const auto psi = basis_values(d, p);
      for (int i = 0; i < 4; ++i) {
        const Vec3 pg = proj * ctx.grad[i];
        for (int j = 0; j < 4; ++j)
          for (int c = 0; c < 3; ++c)
            local(i, 3 * j + c) += p.w * pg[c] * psi[j];
      }
    }
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        for (int c = 0; c < 3; ++c)
          buf.emplace_back(ctx.scalar_dof[i],
                           d.dofs.velocity_dof(ctx.scalar_dof[j], c),
                           local(i, 3 * j + c));
  });
  return from_triplets(n_p, n_u, triplets);
}

SparseMatrix assemble_pressure_stab(const Discretization& d,
                                    const SolverParams& params) {
  SolverParams p = params;
  p.resolve_defaults(d.mesh.h);
  p.validate();
  const int n_p = d.dofs.n_pressure();
  auto triplets = assemble_triplets(
      int(d.active.tets.size()), [&](int k, std::vector<Triplet>& buf) {
        const int tet = d.active.tets[k];
        const auto pts = d.mesh.tet_points(tet);
        const auto grad = p1_basis_gradients(pts);
        const double vol = tet_volume(pts);  // 1-point rule is exact here
        std::array<int, 4> dof;
        for (int i = 0; i < 4; ++i)
          dof[i] = d.dofs.vertex_to_dof[d.mesh.tets[tet][i]];
        for (int i = 0; i < 4; ++i)
          for (int j = 0; j < 4; ++j)
            buf.emplace_back(dof[i], dof[j],
                             p.rho_p * vol * grad[i].dot(grad[j]));
      });
  return from_triplets(n_p, n_p, triplets);
}

SparseMatrix assemble_convection(const Discretization& d,
                                 const Vector& u_tilde, NonlinearForm form) {
  const int n_u = d.dofs.n_velocity();
  if (u_tilde.size() != n_u)
    throw std::invalid_argument("assemble_convection: field size mismatch");
  if (form == NonlinearForm::none) return SparseMatrix(n_u, n_u);

  SurfaceLoop loop(d);
  auto triplets = loop.assemble([&](const TriangleContext& ctx,
                                    std::vector<Triplet>& buf) {
    Eigen::Matrix<double, 12, 12> local = Eigen::Matrix<double, 12, 12>::Zero();
    for (int q = 0; q < ctx.n_pts; ++q) {
      const auto& p = ctx.pts[q];
      const Mat3 proj = tangential_projector(p.normal);
      const auto psi = basis_values(d, p);
      Vec3 w = Vec3::Zero();
      for (int i = 0; i < 4; ++i)
        for (int c = 0; c < 3; ++c)
          w[c] += psi[i] * u_tilde[d.dofs.velocity_dof(ctx.scalar_dof[i], c)];
      const Vec3 pw = proj * w;
      std::array<Vec3, 4> pg;
      for (int i = 0; i < 4; ++i) pg[i] = proj * ctx.grad[i];

      // grad_G(psi_j e_b) = (P e_b)(P grad_j)^T; applied to w and tested
      // against psi_i e_a.
      for (int j = 0; j < 4; ++j) {
        const double adv = pg[j].dot(w);  // (P grad_j) . w
        for (int b = 0; b < 3; ++b)
          for (int i = 0; i < 4; ++i)
            for (int a = 0; a < 3; ++a) {
              double v = proj(a, b) * adv;
              if (form == NonlinearForm::rotational) v -= pg[j][a] * pw[b];
              local(3 * i + a, 3 * j + b) += p.w * psi[i] * v;
            }
      }
    }
    for (int i = 0; i < 12; ++i)
      for (int j = 0; j < 12; ++j)
        buf.emplace_back(
            d.dofs.velocity_dof(ctx.scalar_dof[i / 3], i % 3),
            d.dofs.velocity_dof(ctx.scalar_dof[j / 3], j % 3), local(i, j));
  });
  const SparseMatrix c0 = from_triplets(n_u, n_u, triplets);
  return 0.5 * (c0 - SparseMatrix(c0.transpose()));
}

Vector assemble_momentum_rhs(const Discretization& d,
                             const ManufacturedCase& mcase, double t,
                             const SolverParams& params) {
  const int n_u = d.dofs.n_velocity();
  if (mcase.zero_forcing) return Vector::Zero(n_u);
  SurfaceLoop loop(d);
  return loop.accumulate(n_u, [&](const TriangleContext& ctx, Vector& out) {
    for (int q = 0; q < ctx.n_pts; ++q) {
      const auto& p = ctx.pts[q];
      const Vec3 f = mcase.forcing_extended(p.x, t, params.nu);
      const auto psi = basis_values(d, p);
      for (int i = 0; i < 4; ++i)
        for (int c = 0; c < 3; ++c)
          out[d.dofs.velocity_dof(ctx.scalar_dof[i], c)] +=
              p.w * psi[i] * f[c];
    }
  });
}

Vector assemble_continuity_rhs(const Discretization& d,
                               const ManufacturedCase& mcase, double t) {
  const int n_p = d.dofs.n_pressure();
  if (mcase.divergence_free) return Vector::Zero(n_p);
  SurfaceLoop loop(d);
  return loop.accumulate(n_p, [&](const TriangleContext& ctx, Vector& out) {
    for (int q = 0; q < ctx.n_pts; ++q) {
      const auto& p = ctx.pts[q];
      const Mat3 proj = tangential_projector(p.normal);
      const Vec3 u = mcase.velocity(p.x, t);
      for (int i = 0; i < 4; ++i)
        out[ctx.scalar_dof[i]] += p.w * (proj * ctx.grad[i]).dot(u);
    }
  });
}

Vector assemble_mean_vector(const Discretization& d) {
  const int n_p = d.dofs.n_pressure();
  SurfaceLoop loop(d);
  return loop.accumulate(n_p, [&](const TriangleContext& ctx, Vector& out) {
    for (int q = 0; q < ctx.n_pts; ++q) {
      const auto psi = basis_values(d, ctx.pts[q]);
      for (int i = 0; i < 4; ++i)
        out[ctx.scalar_dof[i]] += ctx.pts[q].w * psi[i];
    }
  });
}

StepSystem assemble_system(const Discretization& d,
                           const SolverParams& params) {
  SolverParams p = params;
  p.resolve_defaults(d.mesh.h);
  p.validate();

  StepSystem sys;
  sys.mass = assemble_mass(d);
  sys.visc = assemble_strain_part(d);
  sys.penalty = assemble_penalty_part(d);
  sys.stab_u = assemble_normal_stab_part(d);
  sys.stiffness = p.nu * sys.visc;
  sys.stiffness += p.tau * sys.penalty;
  sys.stiffness += p.rho_u * sys.stab_u;
  sys.coupling = assemble_pressure_coupling(d);
  sys.stab_p = assemble_pressure_stab(d, p);
  sys.mean = assemble_mean_vector(d);
  sys.surface_area = d.surface.area();
  return sys;
}

}  // namespace surfnse
