#pragma once

#include <Eigen/Dense>
#include <limits>
#include <vector>

namespace igt::euclid {

/// Uniform box grid in R^m, one axis per dimension, used for sampled fields
/// and reconstruction targets.
struct BoxGrid {
  Eigen::VectorXd lo;
  Eigen::VectorXd hi;
  std::vector<int> dims;

  int axes() const { return static_cast<int>(dims.size()); }
  double spacing(int axis) const { return (hi[axis] - lo[axis]) / (dims[axis] - 1); }
  double node(int axis, int i) const { return lo[axis] + i * spacing(axis); }
  std::size_t flat_size() const;
  std::vector<std::size_t> dim_sizes() const;

  static BoxGrid cube(int axes, double halfwidth, int pointsPerAxis);
  void validate() const;
};

/// Scalar field on R^n split as x = (x', x'') with dim x' = k+1. Analytic
/// families evaluate in closed form; sampled fields evaluate by separable
/// 4-point Lagrange interpolation inside their box and vanish outside.
class ScalarFieldRn {
public:
  enum class Kind { Gaussian, CounterexampleF0, Sampled };

  static ScalarFieldRn gaussian(int n, int k, Eigen::VectorXd center, double width);
  /// f0(x) = (2+|x'|)^{-(k+1)/p} e^{-|x''|^2} / log^{1/p+delta}(2+|x'|),
  /// with 0 < delta < 1/p' and 1/p + 1/p' = 1.
  static ScalarFieldRn counterexample_f0(int n, int k, double p, double delta);
  static ScalarFieldRn sampled(int n, int k, BoxGrid box, Eigen::ArrayXd values);

  double eval(const Eigen::VectorXd& x) const;
  double eval_split(const Eigen::VectorXd& xp, const Eigen::VectorXd& xpp) const;

  /// Radius beyond which |f| < 1e-12 * peak; infinity for the slowly
  /// decaying counterexample family.
  double support_halfwidth() const;

  int n() const { return n_; }
  int k() const { return k_; }
  Kind kind() const { return kind_; }
  const BoxGrid& box() const { return box_; }
  const Eigen::ArrayXd& samples() const { return values_; }
  double f0_p() const { return p_; }
  double f0_delta() const { return delta_; }

private:
  ScalarFieldRn(int n, int k, Kind kind);

  int n_ = 0, k_ = 0;
  Kind kind_ = Kind::Gaussian;
  Eigen::VectorXd center_;
  double width_ = 1.0;
  double p_ = 2.0, delta_ = 0.25;
  BoxGrid box_;
  Eigen::ArrayXd values_;
};

/// Radial profile of the counterexample family (everything except the
/// Gaussian factor in x''), exposed for the divergence scans.
double f0_radial_profile(double r, int k, double p, double delta);

} // namespace igt::euclid
