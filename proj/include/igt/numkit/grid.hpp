#pragma once

#include <Eigen/Dense>

#include "igt/numkit/reduce.hpp"

namespace igt::numkit {

enum class GridKind { UniformTrapezoid, GaussLegendre, UniformPeriodic };

/// One-dimensional quadrature grid: strictly increasing nodes with positive
/// weights. UniformPeriodic covers [a, b) with the right endpoint excluded.
struct Grid1D {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
  GridKind kind = GridKind::UniformTrapezoid;

  int size() const { return static_cast<int>(nodes.size()); }
  double spacing() const;

  /// For symmetric intervals (a == -b) nodes are mirrored bit-exactly, so
  /// s -> -s is an index reversal.
  static Grid1D uniform_trapezoid(double a, double b, int n);
  static Grid1D gauss_legendre(double a, double b, int n);
  static Grid1D uniform_periodic(double a, double b, int n);

  void validate() const;
};

/// Gauss-Legendre nodes/weights on [-1, 1], mirrored around 0.
void gauss_legendre_rule(int n, Eigen::VectorXd& nodes, Eigen::VectorXd& weights);

/// Gauss-Chebyshev rule of the second kind: integrates
/// g(t) * sqrt(1 - t^2) on [-1, 1] exactly for polynomials of degree <= 2n-1.
void gauss_chebyshev2_rule(int n, Eigen::VectorXd& nodes, Eigen::VectorXd& weights);

/// Composite Gauss-Legendre integration of fn over [a, b] with nPanels
/// equal panels of the given order.
template <class Fn>
double integrate_gl(Fn&& fn, double a, double b, int order, int nPanels = 1) {
  Eigen::VectorXd x, w;
  gauss_legendre_rule(order, x, w);
  Eigen::VectorXd terms(order * nPanels);
  const double h = (b - a) / nPanels;
  for (int p = 0; p < nPanels; ++p) {
    const double lo = a + p * h;
    const double mid = lo + 0.5 * h;
    for (int i = 0; i < order; ++i)
      terms[p * order + i] = 0.5 * h * w[i] * fn(mid + 0.5 * h * x[i]);
  }
  return detail::pairwise_sum_impl(terms.data(), static_cast<std::size_t>(terms.size()));
}

} // namespace igt::numkit
