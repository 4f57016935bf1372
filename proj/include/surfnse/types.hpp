/// \file types.hpp
/// \brief Common linear-algebra aliases used across the library.
#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace surfnse {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Vector = Eigen::VectorXd;

// Compressed row storage: sorted, duplicate-free column indices per row.
using SparseMatrix = Eigen::SparseMatrix<double, Eigen::RowMajor>;
using Triplet = Eigen::Triplet<double>;

/// Tangential projector I - n n^T for a unit normal n.
inline Mat3 tangential_projector(const Vec3& n) {
  return Mat3::Identity() - n * n.transpose();
}

}  // namespace surfnse
