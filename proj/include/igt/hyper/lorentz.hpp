#pragma once

#include <Eigen/Dense>

namespace igt::hyper {

/// Signature (n,1) bilinear form [x,y] = -x_1 y_1 - ... - x_n y_n + x_{n+1} y_{n+1}.
double lorentz_inner(const Eigen::VectorXd& x, const Eigen::VectorXd& y);

/// Point of the upper sheet: [x,x] = 1, last coordinate >= 1.
struct HPoint {
  Eigen::VectorXd coords;

  int n() const { return static_cast<int>(coords.size()) - 1; }
  double polar_r() const;
  Eigen::VectorXd polar_theta() const; // unit direction in R^n; e_1 at r = 0

  /// x = theta sinh r + e_{n+1} cosh r, theta a unit vector in R^n.
  static HPoint from_polar(const Eigen::VectorXd& theta, double r);
  static HPoint from_coords(Eigen::VectorXd coords, double tol = 1e-10);
};

/// Point of the one-sheeted hyperboloid [y,y] = -1, parametrized as
/// y = sigma cosh rho + e_{n+1} sinh rho.
struct OneSheetPoint {
  Eigen::VectorXd coords;

  static OneSheetPoint from_polar(const Eigen::VectorXd& sigma, double rho);
  static OneSheetPoint from_coords(Eigen::VectorXd coords, double tol = 1e-10);
  double polar_rho() const;
  Eigen::VectorXd polar_sigma() const;
};

/// dist(x,y) = arccosh [x,y], clamped at 1 from below to absorb roundoff.
double geodesic_distance(const HPoint& x, const HPoint& y);

/// Lorentz frame with first column zeta ([zeta,zeta] = -1), middle columns
/// spacelike and the last column timelike on the upper sheet; satisfies
/// M^T G M = G for G = diag(-1,...,-1,+1). Built by Gram-Schmidt in the
/// Lorentz form over the standard basis in fixed order.
Eigen::MatrixXd lorentz_frame(const Eigen::VectorXd& zeta);

} // namespace igt::hyper
