#pragma once

#include <Eigen/Dense>
#include <complex>
#include <span>

#include "igt/numkit/grid.hpp"

namespace igt::numkit {

/// Unnormalized power-of-two DFT. sign=+1 uses the kernel e^{+2 pi i jk/N};
/// dft_1d(dft_1d(x, +1), -1) / N recovers x.
Eigen::VectorXcd dft_1d(std::span<const std::complex<double>> samples, int sign);
Eigen::VectorXcd dft_1d(const Eigen::VectorXcd& samples, int sign);

struct FtResult {
  Eigen::VectorXcd values;
  bool truncated = false; // integrand tail at the grid ends above tail_tol
};

/// Quadrature approximation to the line integral  f^(y) = int f(x) e^{ixy} dx
/// on the grid's interval:  sum_i w_i f(x_i) e^{i x_i y}.
FtResult continuous_ft_1d(const Grid1D& grid, std::span<const double> samples,
                          std::span<const double> frequencies, double tail_tol = 1e-12);

} // namespace igt::numkit
