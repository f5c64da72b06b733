#include "igt/numkit/grid.hpp"

#include <cmath>

#include "igt/errors.hpp"

namespace igt::numkit {

double Grid1D::spacing() const {
  if (kind == GridKind::GaussLegendre)
    throw invalid_argument("Grid1D::spacing: Gauss-Legendre grid is not uniform");
  if (size() < 2) throw invalid_argument("Grid1D::spacing: need at least 2 nodes");
  return nodes[1] - nodes[0];
}

Grid1D Grid1D::uniform_trapezoid(double a, double b, int n) {
  if (n < 2 || !(b > a)) throw invalid_argument("uniform_trapezoid: need n >= 2 and b > a");
  Grid1D g;
  g.kind = GridKind::UniformTrapezoid;
  g.nodes.resize(n);
  g.weights.resize(n);
  const double h = (b - a) / (n - 1);
  if (a == -b) {
    // Mirror so that nodes[n-1-i] == -nodes[i] bit-exactly.
    for (int i = 0; i < n / 2; ++i) {
      g.nodes[i] = a + i * h;
      g.nodes[n - 1 - i] = -g.nodes[i];
    }
    if (n % 2 == 1) g.nodes[n / 2] = 0.0;
  } else {
    for (int i = 0; i < n; ++i) g.nodes[i] = a + i * h;
    g.nodes[n - 1] = b;
  }
  g.weights.setConstant(h);
  g.weights[0] = 0.5 * h;
  g.weights[n - 1] = 0.5 * h;
  g.validate();
  return g;
}

Grid1D Grid1D::gauss_legendre(double a, double b, int n) {
  if (n < 1 || !(b > a)) throw invalid_argument("gauss_legendre: need n >= 1 and b > a");
  Eigen::VectorXd x, w;
  gauss_legendre_rule(n, x, w);
  Grid1D g;
  g.kind = GridKind::GaussLegendre;
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  g.nodes = (mid + (half * x.array())).matrix();
  g.weights = half * w;
  g.validate();
  return g;
}

Grid1D Grid1D::uniform_periodic(double a, double b, int n) {
  if (n < 2 || !(b > a)) throw invalid_argument("uniform_periodic: need n >= 2 and b > a");
  Grid1D g;
  g.kind = GridKind::UniformPeriodic;
  g.nodes.resize(n);
  g.weights.resize(n);
  const double h = (b - a) / n;
  for (int i = 0; i < n; ++i) g.nodes[i] = a + i * h;
  g.weights.setConstant(h);
  g.validate();
  return g;
}

void Grid1D::validate() const {
  if (nodes.size() != weights.size())
    throw invalid_argument("Grid1D: nodes/weights length mismatch");
  for (int i = 0; i + 1 < size(); ++i)
    if (!(nodes[i] < nodes[i + 1])) throw invalid_argument("Grid1D: nodes not strictly increasing");
  if ((weights.array() <= 0.0).any()) throw invalid_argument("Grid1D: weights must be positive");
}

void gauss_legendre_rule(int n, Eigen::VectorXd& nodes, Eigen::VectorXd& weights) {
  if (n < 1) throw invalid_argument("gauss_legendre_rule: n >= 1 required");
  nodes.resize(n);
  weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Tricomi initial guess, then Newton on the three-term recurrence.
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 64; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    // One clean-up pass for the weight at the converged node.
    double p0 = 1.0, p1 = x;
    for (int j = 2; j <= n; ++j) {
      const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    nodes[i] = -x; // ascending order, mirrored halves
    nodes[n - 1 - i] = x;
    weights[i] = w;
    weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) nodes[n / 2] = 0.0;
}

void gauss_chebyshev2_rule(int n, Eigen::VectorXd& nodes, Eigen::VectorXd& weights) {
  if (n < 1) throw invalid_argument("gauss_chebyshev2_rule: n >= 1 required");
  nodes.resize(n);
  weights.resize(n);
  for (int i = 1; 2 * i <= n + 1; ++i) {
    const double phi = i * M_PI / (n + 1);
    const double s = std::sin(phi);
    nodes[i - 1] = std::cos(phi);
    nodes[n - i] = -nodes[i - 1];
    weights[i - 1] = M_PI / (n + 1) * s * s;
    weights[n - i] = weights[i - 1];
  }
  if (n % 2 == 1) nodes[n / 2] = 0.0;
  // cos is decreasing in phi; flip to ascending.
  nodes.reverseInPlace();
  weights.reverseInPlace();
}

} // namespace igt::numkit
