#include "igt/hyper/lorentz.hpp"

#include <cmath>

#include "igt/errors.hpp"

namespace igt::hyper {

double lorentz_inner(const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  const int d = static_cast<int>(x.size());
  if (d != y.size() || d < 2) throw invalid_argument("lorentz_inner: dimension mismatch");
  return x[d - 1] * y[d - 1] - x.head(d - 1).dot(y.head(d - 1));
}

double HPoint::polar_r() const {
  return std::acosh(std::max(1.0, coords[coords.size() - 1]));
}

Eigen::VectorXd HPoint::polar_theta() const {
  const int nn = n();
  Eigen::VectorXd sp = coords.head(nn);
  const double len = sp.norm();
  if (len < 1e-300) return Eigen::VectorXd::Unit(nn, 0);
  return sp / len;
}

HPoint HPoint::from_polar(const Eigen::VectorXd& theta, double r) {
  if (std::abs(theta.norm() - 1.0) > 1e-10)
    throw invalid_argument("HPoint::from_polar: |theta| must be 1");
  if (r < 0.0) throw invalid_argument("HPoint::from_polar: r >= 0 required");
  HPoint p;
  p.coords.resize(theta.size() + 1);
  p.coords.head(theta.size()) = std::sinh(r) * theta;
  p.coords[theta.size()] = std::cosh(r);
  return p;
}

HPoint HPoint::from_coords(Eigen::VectorXd coords, double tol) {
  HPoint p;
  p.coords = std::move(coords);
  const double q = lorentz_inner(p.coords, p.coords);
  if (std::abs(q - 1.0) > tol || p.coords[p.coords.size() - 1] <= 0.0)
    throw invalid_argument("HPoint::from_coords: not on the upper sheet of [x,x]=1");
  return p;
}

OneSheetPoint OneSheetPoint::from_polar(const Eigen::VectorXd& sigma, double rho) {
  if (std::abs(sigma.norm() - 1.0) > 1e-10)
    throw invalid_argument("OneSheetPoint::from_polar: |sigma| must be 1");
  OneSheetPoint p;
  p.coords.resize(sigma.size() + 1);
  p.coords.head(sigma.size()) = std::cosh(rho) * sigma;
  p.coords[sigma.size()] = std::sinh(rho);
  return p;
}

OneSheetPoint OneSheetPoint::from_coords(Eigen::VectorXd coords, double tol) {
  OneSheetPoint p;
  p.coords = std::move(coords);
  const double q = lorentz_inner(p.coords, p.coords);
  if (std::abs(q + 1.0) > tol)
    throw invalid_argument("OneSheetPoint::from_coords: [y,y] must equal -1");
  return p;
}

double OneSheetPoint::polar_rho() const { return std::asinh(coords[coords.size() - 1]); }

Eigen::VectorXd OneSheetPoint::polar_sigma() const {
  const int nn = static_cast<int>(coords.size()) - 1;
  Eigen::VectorXd sp = coords.head(nn);
  return sp / sp.norm();
}

double geodesic_distance(const HPoint& x, const HPoint& y) {
  const double q = lorentz_inner(x.coords, y.coords);
  if (q < 1.0 - 1e-8) throw invalid_argument("geodesic_distance: [x,y] < 1, points not on H^n");
  return std::acosh(std::max(1.0, q));
}

Eigen::MatrixXd lorentz_frame(const Eigen::VectorXd& zeta) {
  const int d = static_cast<int>(zeta.size());
  if (std::abs(lorentz_inner(zeta, zeta) + 1.0) > 1e-8)
    throw invalid_argument("lorentz_frame: [zeta,zeta] must equal -1");

  Eigen::MatrixXd frame(d, d);
  frame.col(0) = zeta;

  // Timelike column from e_d: span(zeta, e_d) has signature (1,1), so the
  // Lorentz projection of e_d away from zeta stays timelike.
  Eigen::VectorXd b = Eigen::VectorXd::Unit(d, d - 1);
  b += lorentz_inner(b, zeta) * zeta;
  b /= std::sqrt(lorentz_inner(b, b));
  if (b[d - 1] < 0.0) b = -b;
  frame.col(d - 1) = b;

  int filled = 1; // spacelike columns accepted so far (zeta itself)
  for (int cand = 0; cand < d && filled < d - 1; ++cand) {
    Eigen::VectorXd x = Eigen::VectorXd::Unit(d, cand);
    for (int pass = 0; pass < 2; ++pass) {
      x += lorentz_inner(x, zeta) * zeta;
      x -= lorentz_inner(x, b) * b;
      for (int j = 1; j < filled; ++j) x += lorentz_inner(x, frame.col(j)) * frame.col(j);
    }
    const double q = -lorentz_inner(x, x);
    if (q < 1e-12) continue; // dependent candidate
    frame.col(filled) = x / std::sqrt(q);
    ++filled;
  }
  if (filled != d - 1) throw numerical_error("lorentz_frame: failed to complete frame");
  return frame;
}

} // namespace igt::hyper
