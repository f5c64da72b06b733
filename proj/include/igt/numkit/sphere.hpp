#pragma once

#include <Eigen/Dense>
#include <vector>

namespace igt::numkit {

/// Surface area of the unit sphere S^d: 2 pi^{(d+1)/2} / Gamma((d+1)/2).
double sphere_surface_area(int d);

/// Product quadrature on S^d, d in {1,2,3}. Points are unit rows of
/// `points`; weights sum to 1 (normalized) or to sigma_d. `order` is the
/// guaranteed polynomial exactness degree, `antipode[i]` indexes the node
/// equal to -points.row(i) bit-exactly.
struct SphereQuadrature {
  int dim = 0;
  Eigen::MatrixXd points;  // N x (dim+1)
  Eigen::VectorXd weights; // N
  bool normalized = true;
  int order = 0;
  std::vector<int> antipode;

  int size() const { return static_cast<int>(points.rows()); }
  Eigen::VectorXd point(int i) const { return points.row(i).transpose(); }
  double weight_sum_target() const;
};

/// Uniform azimuth x Gauss rule in the polar variable per axis. The S^3
/// polar factor uses the Chebyshev rule of the second kind so that the
/// sin^2 polar weight is integrated exactly.
SphereQuadrature make_sphere_quadrature(int d, int order, bool normalized);

} // namespace igt::numkit
