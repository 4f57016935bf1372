#include "surfnse/quadrature.hpp"

#include <stdexcept>

namespace surfnse {

double triangle_area(const Vec3& a, const Vec3& b, const Vec3& c) {
  return 0.5 * (b - a).cross(c - a).norm();
}

double tet_volume(const std::array<Vec3, 4>& tet) {
  return (tet[1] - tet[0]).cross(tet[2] - tet[0]).dot(tet[3] - tet[0]) / 6.0;
}

namespace {

struct BaryWeight {
  double l0, l1, l2;
  double w;  // fraction of the area
};

void push_perm3(std::vector<BaryWeight>& rule, double a, double w) {
  const double c = 1.0 - 2.0 * a;
  rule.push_back({a, a, c, w});
  rule.push_back({a, c, a, w});
  rule.push_back({c, a, a, w});
}

void push_perm6(std::vector<BaryWeight>& rule, double a, double b, double w) {
  const double c = 1.0 - a - b;
  rule.push_back({a, b, c, w});
  rule.push_back({a, c, b, w});
  rule.push_back({b, a, c, w});
  rule.push_back({b, c, a, w});
  rule.push_back({c, a, b, w});
  rule.push_back({c, b, a, w});
}

// Dunavant symmetric rules.
std::vector<BaryWeight> triangle_rule(int degree) {
  std::vector<BaryWeight> rule;
  switch (degree) {
    case 1:
      rule.push_back({1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0, 1.0});
      break;
    case 2:
      push_perm3(rule, 1.0 / 6.0, 1.0 / 3.0);
      break;
    case 3:
    case 4:
      push_perm3(rule, 0.445948490915965, 0.223381589678011);
      push_perm3(rule, 0.091576213509771, 0.109951743655322);
      break;
    case 5:
    case 6:
      push_perm3(rule, 0.063089014491502, 0.050844906370207);
      push_perm3(rule, 0.249286745170910, 0.116786275726379);
      push_perm6(rule, 0.310352451033785, 0.053145049844816,
                 0.082851075618374);
      break;
    default:
      throw std::invalid_argument("triangle_quadrature: unsupported degree " +
                                  std::to_string(degree));
  }
  return rule;
}

}  // namespace

std::vector<QuadPoint> triangle_quadrature(const Vec3& a, const Vec3& b,
                                           const Vec3& c, int degree) {
  const double area = triangle_area(a, b, c);
  std::vector<QuadPoint> pts;
  for (const auto& q : triangle_rule(degree)) {
    pts.push_back({q.l0 * a + q.l1 * b + q.l2 * c, q.w * area});
  }
  return pts;
}

std::vector<QuadPoint> volume_quadrature(const std::array<Vec3, 4>& tet,
                                         int degree) {
  const double vol = tet_volume(tet);
  auto map = [&](double l0, double l1, double l2, double l3) -> Vec3 {
    return l0 * tet[0] + l1 * tet[1] + l2 * tet[2] + l3 * tet[3];
  };
  std::vector<QuadPoint> pts;
  switch (degree) {
    case 1:
      pts.push_back({map(0.25, 0.25, 0.25, 0.25), vol});
      break;
    case 2: {
      const double a = 0.585410196624969;  // (5 + 3 sqrt 5) / 20
      const double b = 0.138196601125011;  // (5 - sqrt 5) / 20
      pts.push_back({map(a, b, b, b), vol / 4.0});
      pts.push_back({map(b, a, b, b), vol / 4.0});
      pts.push_back({map(b, b, a, b), vol / 4.0});
      pts.push_back({map(b, b, b, a), vol / 4.0});
      break;
    }
    case 3: {
      pts.push_back({map(0.25, 0.25, 0.25, 0.25), -0.8 * vol});
      const double a = 0.5, b = 1.0 / 6.0;
      pts.push_back({map(a, b, b, b), 0.45 * vol});
      pts.push_back({map(b, a, b, b), 0.45 * vol});
      pts.push_back({map(b, b, a, b), 0.45 * vol});
      pts.push_back({map(b, b, b, a), 0.45 * vol});
      break;
    }
    default:
      throw std::invalid_argument("volume_quadrature: unsupported degree " +
                                  std::to_string(degree));
  }
  return pts;
}

}  // namespace surfnse
