#include "igt/numkit/basis.hpp"

#include "igt/errors.hpp"

namespace igt::numkit {

Eigen::MatrixXd perp_basis_in_span(const Eigen::MatrixXd& span, const Eigen::VectorXd& w) {
  const int m = static_cast<int>(span.cols());
  if (m < 1 || span.rows() != w.size())
    throw invalid_argument("perp_basis_in_span: shape mismatch");
  Eigen::MatrixXd out(span.rows(), m - 1);
  int filled = 0;
  for (int c = 0; c < m && filled < m - 1; ++c) {
    Eigen::VectorXd x = span.col(c);
    for (int pass = 0; pass < 2; ++pass) {
      x -= x.dot(w) * w;
      for (int j = 0; j < filled; ++j) x -= x.dot(out.col(j)) * out.col(j);
    }
    const double q = x.squaredNorm();
    if (q < 1e-12) continue;
    out.col(filled++) = x / std::sqrt(q);
  }
  if (filled != m - 1)
    throw numerical_error("perp_basis_in_span: failed to complete basis");
  return out;
}

} // namespace igt::numkit
