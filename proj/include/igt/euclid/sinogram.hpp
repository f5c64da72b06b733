#pragma once

#include <Eigen/Dense>
#include <vector>

#include "igt/numkit/grid.hpp"
#include "igt/numkit/sphere.hpp"

namespace igt::euclid {

/// Plane tau(theta, s; x'') = {x' : theta . x' = s} + x''. The pair
/// (theta, s) and (-theta, -s) name the same plane.
struct PlaneParam {
  Eigen::VectorXd theta; // unit vector in R^{k+1}
  double s = 0.0;
  Eigen::VectorXd xpp; // in R^{n-k-1}
};

/// Parameter grids of a restricted sinogram: directions on S^k, offsets s,
/// and a product grid over the x'' coordinates (empty when k = n-1).
struct SinogramGrids {
  numkit::SphereQuadrature theta; // normalized weights (probability measure)
  numkit::Grid1D s;
  std::vector<numkit::Grid1D> xpp;

  int k() const { return theta.dim; }
  int n() const { return theta.dim + 1 + static_cast<int>(xpp.size()); }
  int nxpp_flat() const;
  Eigen::VectorXd xpp_point(int flat) const;
  bool s_symmetric() const;

  /// Desk defaults: order-thetaOrder quadrature on S^k, symmetric trapezoid
  /// s-grid, cubic x'' axes [-xppHalf, xppHalf].
  static SinogramGrids make(int n, int k, int thetaOrder, double sHalf, int sCount,
                            double xppHalf, int xppCount);
};

struct RestrictedSinogram {
  int n = 0;
  SinogramGrids grids;
  Eigen::ArrayXd values; // layout [theta][s][xppFlat], xpp fastest

  int k() const { return grids.k(); }
  int ntheta() const { return grids.theta.size(); }
  int ns() const { return grids.s.size(); }
  int nxpp() const { return grids.nxpp_flat(); }

  std::size_t index(int it, int is, int ix) const {
    return (static_cast<std::size_t>(it) * ns() + is) * nxpp() + ix;
  }
  double& at(int it, int is, int ix) { return values[static_cast<Eigen::Index>(index(it, is, ix))]; }
  double at(int it, int is, int ix) const {
    return values[static_cast<Eigen::Index>(index(it, is, ix))];
  }

  std::vector<std::size_t> rgrd_dims() const;
  bool all_finite() const;

  static RestrictedSinogram zeros(int n, SinogramGrids grids);
};

} // namespace igt::euclid
