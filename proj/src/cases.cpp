#include "surfnse/cases.hpp"

#include <cmath>
#include <stdexcept>

namespace surfnse {

namespace {
const double kAlpha = std::sqrt(3.0 / (4.0 * M_PI));

Vec3 to_sphere(const Vec3& x) {
  const double r = x.norm();
  if (r < 1e-12)
    throw std::domain_error("normal extension undefined at the origin");
  return x / r;
}

void require_on_sphere(const Vec3& x) {
  if (std::abs(x.norm() - 1.0) > 1e-9)
    throw std::domain_error("point is not on the unit sphere");
}
}  // namespace

Vec3 killing_field(const Vec3& x) {
  if (x.norm() == 0.0) throw std::domain_error("killing_field: x = 0");
  return kAlpha * Vec3(-x[1], x[0], 0.0);
}

CaseId case_from_string(const std::string& name) {
  if (name == "exact1") return CaseId::exact1;
  if (name == "sol2a") return CaseId::sol2a;
  if (name == "sol2b") return CaseId::sol2b;
  if (name == "killing") return CaseId::killing;
  throw std::invalid_argument("unknown case '" + name + "'");
}

std::string to_string(CaseId id) {
  switch (id) {
    case CaseId::exact1: return "exact1";
    case CaseId::sol2a: return "sol2a";
    case CaseId::sol2b: return "sol2b";
    case CaseId::killing: return "killing";
  }
  return "?";
}

ManufacturedCase make_case(CaseId id) {
  ManufacturedCase c;
  c.id = id;
  switch (id) {
    case CaseId::exact1:
      // u = f(z,t) xi_z with f = 1 + z (1 - 3 e^-t), p = 0.
      c.divergence_free = true;
      c.zero_forcing = false;
      c.velocity_on_sphere = [](const Vec3& x, double t) {
        return (1.0 + x[2] * (1.0 - 3.0 * std::exp(-t))) * killing_field(x);
      };
      c.pressure_on_sphere = [](const Vec3&, double) { return 0.0; };
      c.velocity_dt_on_sphere = [](const Vec3& x, double t) {
        return 3.0 * x[2] * std::exp(-t) * killing_field(x);
      };
      break;
    case CaseId::sol2a:
      // u = x f1(z,t) xi_z with f1 = 2 + z (4 - 10 e^-t), p = 0.
      c.divergence_free = false;
      c.zero_forcing = false;
      c.velocity_on_sphere = [](const Vec3& x, double t) {
        return x[0] * (2.0 + x[2] * (4.0 - 10.0 * std::exp(-t))) *
               killing_field(x);
      };
      c.pressure_on_sphere = [](const Vec3&, double) { return 0.0; };
      c.velocity_dt_on_sphere = [](const Vec3& x, double t) {
        return 10.0 * x[0] * x[2] * std::exp(-t) * killing_field(x);
      };
      break;
    case CaseId::sol2b:
      // u = f2(t) P e_x with f2 = 1 - exp(1 - 6t), p = x y^3 + z.
      c.divergence_free = false;
      c.zero_forcing = false;
      c.velocity_on_sphere = [](const Vec3& x, double t) {
        const Vec3 ex(1.0, 0.0, 0.0);
        return (1.0 - std::exp(1.0 - 6.0 * t)) * (ex - x * x[0]);
      };
      c.pressure_on_sphere = [](const Vec3& x, double) {
        return x[0] * x[1] * x[1] * x[1] + x[2];
      };
      c.velocity_dt_on_sphere = [](const Vec3& x, double t) {
        const Vec3 ex(1.0, 0.0, 0.0);
        return 6.0 * std::exp(1.0 - 6.0 * t) * (ex - x * x[0]);
      };
      break;
    case CaseId::killing:
      // Stationary rigid rotation, no forcing; the discrete pressure absorbs
      // the centripetal term.
      c.divergence_free = true;
      c.zero_forcing = true;
      c.velocity_on_sphere = [](const Vec3& x, double) {
        return killing_field(x);
      };
      c.pressure_on_sphere = [](const Vec3&, double) { return 0.0; };
      c.velocity_dt_on_sphere = [](const Vec3&, double) {
        return Vec3::Zero().eval();
      };
      break;
  }
  return c;
}

Vec3 ManufacturedCase::velocity(const Vec3& x, double t) const {
  return velocity_on_sphere(to_sphere(x), t);
}

double ManufacturedCase::pressure(const Vec3& x, double t) const {
  return pressure_on_sphere(to_sphere(x), t);
}

Vec3 ManufacturedCase::velocity_dt(const Vec3& x, double t) const {
  return velocity_dt_on_sphere(to_sphere(x), t);
}

namespace {

// 4th-order central difference of a vector-valued map, one direction.
template <class F>
Vec3 fd_dir(const F& f, const Vec3& x, int dir, double d) {
  Vec3 e = Vec3::Zero();
  e[dir] = 1.0;
  return (-f(x + 2.0 * d * e) + 8.0 * f(x + d * e) - 8.0 * f(x - d * e) +
          f(x - 2.0 * d * e)) /
         (12.0 * d);
}

template <class F>
Mat3 fd_jacobian(const F& f, const Vec3& x, double d) {
  Mat3 jac;
  for (int b = 0; b < 3; ++b) jac.col(b) = fd_dir(f, x, b, d);
  return jac;
}

}  // namespace

Mat3 ManufacturedCase::extension_jacobian(const Vec3& x, double t) const {
  return fd_jacobian([&](const Vec3& y) { return velocity(y, t); }, x,
                     fd_step);
}

Mat3 ManufacturedCase::surface_gradient(const Vec3& x, double t) const {
  require_on_sphere(x);
  const Mat3 proj = tangential_projector(x);
  return proj * extension_jacobian(x, t) * proj;
}

double ManufacturedCase::divergence(const Vec3& x, double t) const {
  return surface_gradient(x, t).trace();
}

Vec3 ManufacturedCase::surface_pressure_gradient(const Vec3& x,
                                                 double t) const {
  require_on_sphere(x);
  auto pe = [&](const Vec3& y) { return pressure(y, t); };
  Vec3 g;
  for (int b = 0; b < 3; ++b) {
    Vec3 e = Vec3::Zero();
    e[b] = 1.0;
    const double d = fd_step;
    g[b] = (-pe(x + 2.0 * d * e) + 8.0 * pe(x + d * e) - 8.0 * pe(x - d * e) +
            pe(x - 2.0 * d * e)) /
           (12.0 * d);
  }
  return tangential_projector(x) * g;
}

Vec3 ManufacturedCase::forcing(const Vec3& x, double t, double nu) const {
  require_on_sphere(x);
  if (zero_forcing) return Vec3::Zero();

  const Mat3 proj = tangential_projector(x);
  const Vec3 u = velocity_on_sphere(x, t);
  const Mat3 grad_u = proj * extension_jacobian(x, t) * proj;

  Vec3 f = velocity_dt_on_sphere(x, t) + grad_u * u;

  if (nu != 0.0) {
    // Normal extension of the surface strain tensor, differentiated again.
    auto strain = [&](const Vec3& y) {
      const Vec3 z = to_sphere(y);
      const Mat3 p = tangential_projector(z);
      const Mat3 jac = extension_jacobian(z, t);
      return (0.5 * (p * (jac + jac.transpose()) * p)).eval();
    };
    Mat3 dstrain[3];
    for (int b = 0; b < 3; ++b) {
      Vec3 e = Vec3::Zero();
      e[b] = 1.0;
      const double d = fd_step;
      dstrain[b] = (-strain(x + 2.0 * d * e) + 8.0 * strain(x + d * e) -
                    8.0 * strain(x - d * e) + strain(x - 2.0 * d * e)) /
                   (12.0 * d);
    }
    Vec3 div_strain;
    for (int r = 0; r < 3; ++r) {
      Mat3 row_jac;  // (a,b) = d_b (E_s)_{r a}
      for (int b = 0; b < 3; ++b)
        for (int a = 0; a < 3; ++a) row_jac(a, b) = dstrain[b](r, a);
      div_strain[r] = (proj * row_jac * proj).trace();
    }
    f -= nu * (proj * div_strain);
  }

  f += surface_pressure_gradient(x, t);
  return proj * f;
}

Vec3 ManufacturedCase::forcing_extended(const Vec3& x, double t,
                                        double nu) const {
  if (zero_forcing) return Vec3::Zero();
  return forcing(to_sphere(x), t, nu);
}

double sol2a_kinetic_energy_reference(double t) {
  return 2.0 / 35.0 *
         (44.0 - 80.0 * std::exp(-t) + 100.0 * std::exp(-2.0 * t));
}

}  // namespace surfnse
