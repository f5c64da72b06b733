#include "igt/euclid/field.hpp"

#include <cmath>

#include "igt/errors.hpp"

namespace igt::euclid {

std::size_t BoxGrid::flat_size() const {
  std::size_t s = 1;
  for (int d : dims) s *= static_cast<std::size_t>(d);
  return s;
}

std::vector<std::size_t> BoxGrid::dim_sizes() const {
  std::vector<std::size_t> out(dims.begin(), dims.end());
  return out;
}

BoxGrid BoxGrid::cube(int axes, double halfwidth, int pointsPerAxis) {
  BoxGrid g;
  g.lo = Eigen::VectorXd::Constant(axes, -halfwidth);
  g.hi = Eigen::VectorXd::Constant(axes, halfwidth);
  g.dims.assign(axes, pointsPerAxis);
  g.validate();
  return g;
}

void BoxGrid::validate() const {
  if (lo.size() != hi.size() || static_cast<int>(dims.size()) != lo.size())
    throw invalid_argument("BoxGrid: axis count mismatch");
  for (int a = 0; a < axes(); ++a) {
    if (!(hi[a] > lo[a])) throw invalid_argument("BoxGrid: hi must exceed lo");
    if (dims[a] < 2) throw invalid_argument("BoxGrid: at least 2 points per axis");
  }
}

ScalarFieldRn::ScalarFieldRn(int n, int k, Kind kind) : n_(n), k_(k), kind_(kind) {
  if (n < 2 || k < 1 || k > n - 1)
    throw invalid_argument("ScalarFieldRn: need n >= 2 and 1 <= k <= n-1");
}

ScalarFieldRn ScalarFieldRn::gaussian(int n, int k, Eigen::VectorXd center, double width) {
  ScalarFieldRn f(n, k, Kind::Gaussian);
  if (center.size() != n) throw invalid_argument("gaussian: center must have size n");
  if (!(width > 0.0)) throw invalid_argument("gaussian: width > 0 required");
  f.center_ = std::move(center);
  f.width_ = width;
  return f;
}

ScalarFieldRn ScalarFieldRn::counterexample_f0(int n, int k, double p, double delta) {
  ScalarFieldRn f(n, k, Kind::CounterexampleF0);
  if (!(p >= 1.0)) throw invalid_argument("counterexample_f0: p >= 1 required");
  const double pprime_inv = 1.0 - 1.0 / p;
  if (!(delta > 0.0 && delta < pprime_inv))
    throw invalid_argument("counterexample_f0: need 0 < delta < 1/p'");
  f.p_ = p;
  f.delta_ = delta;
  return f;
}

ScalarFieldRn ScalarFieldRn::sampled(int n, int k, BoxGrid box, Eigen::ArrayXd values) {
  ScalarFieldRn f(n, k, Kind::Sampled);
  box.validate();
  if (box.axes() != n) throw invalid_argument("sampled: box must have n axes");
  if (static_cast<std::size_t>(values.size()) != box.flat_size())
    throw invalid_argument("sampled: value count does not match box grid");
  for (int d : box.dims)
    if (d < 4) throw invalid_argument("sampled: cubic interpolation needs >= 4 points per axis");
  f.box_ = std::move(box);
  f.values_ = std::move(values);
  return f;
}

double f0_radial_profile(double r, int k, double p, double delta) {
  return std::pow(2.0 + r, -(k + 1.0) / p) / std::pow(std::log(2.0 + r), 1.0 / p + delta);
}

namespace {

// 4-point Lagrange weights for local coordinate t in [0,1] over the stencil
// {-1, 0, 1, 2} around the cell.
inline void cubic_weights(double t, double w[4]) {
  w[0] = -t * (t - 1.0) * (t - 2.0) / 6.0;
  w[1] = (t * t - 1.0) * (t - 2.0) / 2.0;
  w[2] = -t * (t + 1.0) * (t - 2.0) / 2.0;
  w[3] = t * (t * t - 1.0) / 6.0;
}

} // namespace

double ScalarFieldRn::eval(const Eigen::VectorXd& x) const {
  if (x.size() != n_) throw invalid_argument("ScalarFieldRn::eval: point must have size n");
  switch (kind_) {
    case Kind::Gaussian:
      return std::exp(-(x - center_).squaredNorm() / (width_ * width_));
    case Kind::CounterexampleF0: {
      const double r = x.head(k_ + 1).norm();
      const double xppSq = x.tail(n_ - k_ - 1).squaredNorm();
      return f0_radial_profile(r, k_, p_, delta_) * std::exp(-xppSq);
    }
    case Kind::Sampled: {
      // Separable cubic interpolation; zero outside the box.
      constexpr int maxAxes = 8;
      int i0[maxAxes];
      double wts[maxAxes][4];
      for (int a = 0; a < n_; ++a) {
        if (x[a] < box_.lo[a] || x[a] > box_.hi[a]) return 0.0;
        const double t = (x[a] - box_.lo[a]) / box_.spacing(a);
        int c = static_cast<int>(std::floor(t));
        c = std::clamp(c, 1, box_.dims[a] - 3);
        i0[a] = c - 1;
        cubic_weights(t - c, wts[a]);
      }
      // Strides, last axis fastest.
      std::size_t stride[maxAxes];
      std::size_t s = 1;
      for (int a = n_ - 1; a >= 0; --a) {
        stride[a] = s;
        s *= static_cast<std::size_t>(box_.dims[a]);
      }
      double acc = 0.0;
      int idx[maxAxes] = {0};
      while (true) {
        double w = 1.0;
        std::size_t off = 0;
        for (int a = 0; a < n_; ++a) {
          w *= wts[a][idx[a]];
          off += static_cast<std::size_t>(i0[a] + idx[a]) * stride[a];
        }
        acc += w * values_[static_cast<Eigen::Index>(off)];
        int a = n_ - 1;
        while (a >= 0 && ++idx[a] == 4) idx[a--] = 0;
        if (a < 0) break;
      }
      return acc;
    }
  }
  return 0.0;
}

double ScalarFieldRn::eval_split(const Eigen::VectorXd& xp, const Eigen::VectorXd& xpp) const {
  Eigen::VectorXd x(n_);
  x.head(k_ + 1) = xp;
  x.tail(n_ - k_ - 1) = xpp;
  return eval(x);
}

double ScalarFieldRn::support_halfwidth() const {
  switch (kind_) {
    case Kind::Gaussian:
      return center_.norm() + width_ * std::sqrt(std::log(1e12));
    case Kind::CounterexampleF0:
      return std::numeric_limits<double>::infinity();
    case Kind::Sampled: {
      double r2 = 0.0;
      for (int a = 0; a < box_.axes(); ++a) {
        const double m = std::max(std::abs(box_.lo[a]), std::abs(box_.hi[a]));
        r2 += m * m;
      }
      return std::sqrt(r2);
    }
  }
  return 0.0;
}

} // namespace igt::euclid
