#pragma once

#include <Eigen/Dense>

#include "igt/numkit/grid.hpp"

namespace igt::hyper {

/// Scalar field on H^n, evaluated at hyperboloid points x in R^{n+1}.
class HField {
public:
  enum class Kind { ExpDecay, PowerDecay, Sampled };

  /// f(x) = exp(a * (1 - x_{n+1})), a > 0.
  static HField exp_decay(double a);
  /// f(x) = x_{n+1}^{-a}, a > 0.
  static HField power_decay(double a);
  /// Sampled in polar coordinates on H^2 only: periodic angle grid x
  /// uniform r-grid, cubic interpolation, zero beyond rMax.
  static HField sampled_polar_h2(numkit::Grid1D angleGrid, numkit::Grid1D rGrid,
                                 Eigen::ArrayXd values);

  double eval(const Eigen::VectorXd& x) const;
  Kind kind() const { return kind_; }
  double decay_rate() const { return a_; }

private:
  explicit HField(Kind kind) : kind_(kind) {}

  Kind kind_ = Kind::ExpDecay;
  double a_ = 1.0;
  numkit::Grid1D angle_, r_;
  Eigen::ArrayXd values_;
};

} // namespace igt::hyper
