#include "igt/funk/field.hpp"

#include <cmath>

#include "igt/errors.hpp"
#include "igt/numkit/harmonics.hpp"

namespace igt::funk {

SphereField SphereField::constant(int n, double value) {
  if (n < 2) throw invalid_argument("SphereField: n >= 2 required");
  SphereField f(n, Kind::Constant);
  f.value_ = value;
  return f;
}

SphereField SphereField::zonal_legendre(int n, int degree, Eigen::VectorXd axis) {
  if (n < 2) throw invalid_argument("SphereField: n >= 2 required");
  if (degree < 0) throw invalid_argument("zonal_legendre: degree >= 0 required");
  if (axis.size() != n + 1) throw invalid_argument("zonal_legendre: axis must have size n+1");
  if (std::abs(axis.norm() - 1.0) > 1e-10)
    throw invalid_argument("zonal_legendre: |axis| must be 1");
  SphereField f(n, Kind::ZonalLegendre);
  f.degree_ = degree;
  f.axis_ = std::move(axis);
  return f;
}

SphereField SphereField::counterexample_ftilde(int n, int k) {
  if (n < 2 || k < 1 || k >= n - 1)
    throw invalid_argument("counterexample_ftilde: need 1 <= k < n-1");
  SphereField f(n, Kind::CounterexampleFtilde);
  f.kplanes_ = k;
  return f;
}

SphereField SphereField::sampled(int n, numkit::SphereQuadrature quad, Eigen::VectorXd values) {
  if (quad.size() != values.size())
    throw invalid_argument("SphereField::sampled: value count does not match quadrature");
  if (quad.dim != n) throw invalid_argument("SphereField::sampled: quadrature dim must equal n");
  SphereField f(n, Kind::Sampled);
  f.quad_ = std::move(quad);
  f.values_ = std::move(values);
  return f;
}

double SphereField::eval(const Eigen::VectorXd& theta) const {
  if (theta.size() != n_ + 1)
    throw invalid_argument("SphereField::eval: point must have size n+1");
  switch (kind_) {
    case Kind::Constant:
      return value_;
    case Kind::ZonalLegendre:
      return numkit::legendre_p(degree_, axis_.dot(theta));
    case Kind::CounterexampleFtilde: {
      const double tp = theta.head(n_ - kplanes_).norm();
      return 1.0 / (tp * (1.0 - std::log(tp)));
    }
    case Kind::Sampled:
      throw invalid_argument("SphereField::eval: sampled fields carry node values only");
  }
  return 0.0;
}

} // namespace igt::funk
