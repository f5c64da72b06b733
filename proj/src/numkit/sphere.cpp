#include "igt/numkit/sphere.hpp"

#include <cmath>

#include "igt/errors.hpp"
#include "igt/numkit/grid.hpp"

namespace igt::numkit {

double sphere_surface_area(int d) {
  if (d < 0) throw invalid_argument("sphere_surface_area: d >= 0 required");
  return 2.0 * std::pow(M_PI, 0.5 * (d + 1)) / std::tgamma(0.5 * (d + 1));
}

double SphereQuadrature::weight_sum_target() const {
  return normalized ? 1.0 : sphere_surface_area(dim);
}

namespace {

// cos/sin tables for M even equispaced angles with the half-turn mirrored
// bit-exactly: c[m + M/2] == -c[m].
void azimuth_tables(int M, Eigen::VectorXd& c, Eigen::VectorXd& s) {
  c.resize(M);
  s.resize(M);
  for (int m = 0; m < M / 2; ++m) {
    const double a = 2.0 * M_PI * m / M;
    c[m] = std::cos(a);
    s[m] = std::sin(a);
    c[m + M / 2] = -c[m];
    s[m + M / 2] = -s[m];
  }
}

SphereQuadrature circle_quadrature(int order, bool normalized) {
  int M = order + (order % 2); // even node count
  M = std::max(M, 2);
  SphereQuadrature q;
  q.dim = 1;
  q.normalized = normalized;
  q.order = M - 1;
  q.points.resize(M, 2);
  q.weights.setConstant(M, (normalized ? 1.0 : 2.0 * M_PI) / M);
  Eigen::VectorXd c, s;
  azimuth_tables(M, c, s);
  q.points.col(0) = c;
  q.points.col(1) = s;
  q.antipode.resize(M);
  for (int m = 0; m < M; ++m) q.antipode[m] = (m + M / 2) % M;
  return q;
}

SphereQuadrature s2_quadrature(int order, bool normalized) {
  const int nP = (order + 2) / 2; // Gauss-Legendre polar count, exact <= 2nP-1
  const int M = 2 * nP;           // azimuth count, exact <= M-1
  Eigen::VectorXd t, wt;
  gauss_legendre_rule(nP, t, wt);
  Eigen::VectorXd c, s;
  azimuth_tables(M, c, s);
  SphereQuadrature q;
  q.dim = 2;
  q.normalized = normalized;
  q.order = 2 * nP - 1;
  const int N = nP * M;
  q.points.resize(N, 3);
  q.weights.resize(N);
  q.antipode.resize(N);
  const double scale = (normalized ? 1.0 / (4.0 * M_PI) : 1.0) * (2.0 * M_PI / M);
  for (int j = 0; j < nP; ++j) {
    const double z = t[j];
    const double r = std::sqrt(1.0 - z * z);
    for (int m = 0; m < M; ++m) {
      const int idx = j * M + m;
      q.points(idx, 0) = r * c[m];
      q.points(idx, 1) = r * s[m];
      q.points(idx, 2) = z;
      q.weights[idx] = scale * wt[j];
      q.antipode[idx] = (nP - 1 - j) * M + (m + M / 2) % M;
    }
  }
  return q;
}

SphereQuadrature s3_quadrature(int order, bool normalized) {
  const int nP = (order + 2) / 2; // Chebyshev-2 polar count, exact <= 2nP-1
  Eigen::VectorXd t, wt;
  gauss_chebyshev2_rule(nP, t, wt);
  SphereQuadrature base = s2_quadrature(order, false);
  SphereQuadrature q;
  q.dim = 3;
  q.normalized = normalized;
  q.order = std::min(2 * nP - 1, base.order);
  const int nB = base.size();
  const int N = nP * nB;
  q.points.resize(N, 4);
  q.weights.resize(N);
  q.antipode.resize(N);
  const double scale = normalized ? 1.0 / sphere_surface_area(3) : 1.0;
  for (int j = 0; j < nP; ++j) {
    const double z = t[j];
    const double r = std::sqrt(1.0 - z * z);
    for (int b = 0; b < nB; ++b) {
      const int idx = j * nB + b;
      q.points(idx, 0) = r * base.points(b, 0);
      q.points(idx, 1) = r * base.points(b, 1);
      q.points(idx, 2) = r * base.points(b, 2);
      q.points(idx, 3) = z;
      q.weights[idx] = scale * wt[j] * base.weights[b];
      q.antipode[idx] = (nP - 1 - j) * nB + base.antipode[b];
    }
  }
  return q;
}

} // namespace

SphereQuadrature make_sphere_quadrature(int d, int order, bool normalized) {
  if (order < 2) throw invalid_argument("make_sphere_quadrature: order >= 2 required");
  switch (d) {
    case 1: return circle_quadrature(order, normalized);
    case 2: return s2_quadrature(order, normalized);
    case 3: return s3_quadrature(order, normalized);
    default:
      throw unsupported_dimension("make_sphere_quadrature: S^d supported for d in {1,2,3}, got d=" +
                                  std::to_string(d));
  }
}

} // namespace igt::numkit
