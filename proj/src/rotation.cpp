#include "igt/rotation.hpp"

#include <cmath>

#include "igt/errors.hpp"

namespace igt {

BlockRotation make_block_rotation(const Eigen::VectorXd& v, int k) {
  const int nk = static_cast<int>(v.size());
  if (nk < 1 || k < 0) throw invalid_argument("make_block_rotation: need v nonempty, k >= 0");
  if (std::abs(v.norm() - 1.0) > 1e-10)
    throw invalid_argument("make_block_rotation: |v| must be 1 within 1e-10");

  Eigen::MatrixXd gamma = Eigen::MatrixXd::Identity(nk, nk);
  Eigen::VectorXd u = Eigen::VectorXd::Unit(nk, nk - 1) - v;
  const double un = u.norm();
  if (un > 1e-14) {
    u /= un;
    gamma -= 2.0 * u * u.transpose();
    // Householder reflections have determinant -1; flipping the image of e_1
    // restores orientation without touching gamma e_{n-k} = v.
    if (nk >= 2) gamma.col(0) = -gamma.col(0);
  }

  BlockRotation rot;
  rot.n = nk + k;
  rot.k = k;
  rot.matrix = Eigen::MatrixXd::Identity(nk + k + 1, nk + k + 1);
  rot.matrix.topLeftCorner(nk, nk) = gamma;
  return rot;
}

} // namespace igt
