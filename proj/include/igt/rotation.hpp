#pragma once

#include <Eigen/Dense>

namespace igt {

/// Block-diagonal orthogonal map diag(gamma_v, I_{k+1}) on R^{n+1} whose
/// gamma_v block sends e_{n-k} to v inside the leading coordinate plane.
struct BlockRotation {
  Eigen::MatrixXd matrix; // (n+1) x (n+1)
  int n = 0;
  int k = 0;

  Eigen::VectorXd apply(const Eigen::VectorXd& x) const { return matrix * x; }
  Eigen::VectorXd apply_inverse(const Eigen::VectorXd& x) const {
    return matrix.transpose() * x;
  }
};

/// Deterministic construction: Householder reflection in the leading block
/// mapping e_{n-k} to v, with a column sign flip to land in SO when the
/// block size allows it. v.size() == n - k.
BlockRotation make_block_rotation(const Eigen::VectorXd& v, int k);

} // namespace igt
