#include "igt/euclid/sinogram.hpp"

#include <cmath>

#include "igt/errors.hpp"

namespace igt::euclid {

int SinogramGrids::nxpp_flat() const {
  int s = 1;
  for (const auto& g : xpp) s *= g.size();
  return s;
}

Eigen::VectorXd SinogramGrids::xpp_point(int flat) const {
  Eigen::VectorXd p(xpp.size());
  for (int a = static_cast<int>(xpp.size()) - 1; a >= 0; --a) {
    const int na = xpp[a].size();
    p[a] = xpp[a].nodes[flat % na];
    flat /= na;
  }
  return p;
}

bool SinogramGrids::s_symmetric() const {
  return std::abs(s.nodes[0] + s.nodes[s.size() - 1]) < 1e-12;
}

SinogramGrids SinogramGrids::make(int n, int k, int thetaOrder, double sHalf, int sCount,
                                  double xppHalf, int xppCount) {
  if (k < 1 || k > n - 1) throw invalid_argument("SinogramGrids::make: 1 <= k <= n-1 required");
  SinogramGrids g;
  g.theta = numkit::make_sphere_quadrature(k, thetaOrder, true);
  g.s = numkit::Grid1D::uniform_trapezoid(-sHalf, sHalf, sCount);
  for (int a = 0; a < n - k - 1; ++a)
    g.xpp.push_back(numkit::Grid1D::uniform_trapezoid(-xppHalf, xppHalf, xppCount));
  return g;
}

std::vector<std::size_t> RestrictedSinogram::rgrd_dims() const {
  std::vector<std::size_t> d{static_cast<std::size_t>(ntheta()), static_cast<std::size_t>(ns())};
  for (const auto& g : grids.xpp) d.push_back(static_cast<std::size_t>(g.size()));
  return d;
}

bool RestrictedSinogram::all_finite() const { return values.isFinite().all(); }

RestrictedSinogram RestrictedSinogram::zeros(int n, SinogramGrids grids) {
  RestrictedSinogram sg;
  sg.n = n;
  if (grids.n() != n) throw invalid_argument("RestrictedSinogram: grids do not match n");
  sg.grids = std::move(grids);
  sg.values = Eigen::ArrayXd::Zero(static_cast<Eigen::Index>(sg.ntheta()) * sg.ns() * sg.nxpp());
  return sg;
}

} // namespace igt::euclid
