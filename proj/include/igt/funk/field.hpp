#pragma once

#include <Eigen/Dense>

#include "igt/numkit/sphere.hpp"

namespace igt::funk {

/// Scalar field on S^n (points are unit vectors in R^{n+1}). Analytic kinds
/// evaluate anywhere; sampled fields carry values at quadrature nodes only.
class SphereField {
public:
  enum class Kind { Constant, ZonalLegendre, CounterexampleFtilde, Sampled };

  static SphereField constant(int n, double value);
  /// f(theta) = P_degree(axis . theta), axis a unit vector in R^{n+1}.
  static SphereField zonal_legendre(int n, int degree, Eigen::VectorXd axis);
  /// ftilde(theta) = |theta'|^{-1} (1 - log|theta'|)^{-1} with theta' the
  /// first n-k components; unbounded near {theta' = 0}.
  static SphereField counterexample_ftilde(int n, int k);
  static SphereField sampled(int n, numkit::SphereQuadrature quad, Eigen::VectorXd values);

  /// Point evaluation; throws for sampled fields (node values only).
  double eval(const Eigen::VectorXd& theta) const;

  int n() const { return n_; }
  Kind kind() const { return kind_; }
  const numkit::SphereQuadrature& quad() const { return quad_; }
  const Eigen::VectorXd& samples() const { return values_; }

private:
  SphereField(int n, Kind kind) : n_(n), kind_(kind) {}

  int n_ = 2;
  Kind kind_ = Kind::Constant;
  double value_ = 0.0;
  int degree_ = 0;
  int kplanes_ = 1;
  Eigen::VectorXd axis_;
  numkit::SphereQuadrature quad_;
  Eigen::VectorXd values_;
};

} // namespace igt::funk
