#pragma once

#include <Eigen/Dense>

namespace igt::numkit {

/// Orthonormal basis of span(columns) intersected with w-perp, where the
/// input columns are orthonormal and w is a unit vector inside their span.
/// Deterministic: candidates are processed in column order with two
/// Gram-Schmidt passes; returns span.cols()-1 columns.
Eigen::MatrixXd perp_basis_in_span(const Eigen::MatrixXd& span, const Eigen::VectorXd& w);

} // namespace igt::numkit
