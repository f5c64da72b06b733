#include "igt/hyper/field.hpp"

#include <cmath>

#include "igt/errors.hpp"

namespace igt::hyper {

HField HField::exp_decay(double a) {
  if (!(a > 0.0)) throw invalid_argument("HField::exp_decay: a > 0 required");
  HField f(Kind::ExpDecay);
  f.a_ = a;
  return f;
}

HField HField::power_decay(double a) {
  if (!(a > 0.0)) throw invalid_argument("HField::power_decay: a > 0 required");
  HField f(Kind::PowerDecay);
  f.a_ = a;
  return f;
}

HField HField::sampled_polar_h2(numkit::Grid1D angleGrid, numkit::Grid1D rGrid,
                                Eigen::ArrayXd values) {
  if (angleGrid.kind != numkit::GridKind::UniformPeriodic)
    throw invalid_argument("HField::sampled_polar_h2: angle grid must be uniform-periodic");
  if (rGrid.nodes[0] != 0.0)
    throw invalid_argument("HField::sampled_polar_h2: r grid must start at 0");
  if (values.size() != static_cast<Eigen::Index>(angleGrid.size()) * rGrid.size())
    throw invalid_argument("HField::sampled_polar_h2: value count mismatch");
  if (rGrid.size() < 4 || angleGrid.size() < 4)
    throw invalid_argument("HField::sampled_polar_h2: need >= 4 nodes per axis");
  HField f(Kind::Sampled);
  f.angle_ = std::move(angleGrid);
  f.r_ = std::move(rGrid);
  f.values_ = std::move(values);
  return f;
}

namespace {

inline void cubic_weights(double t, double w[4]) {
  w[0] = -t * (t - 1.0) * (t - 2.0) / 6.0;
  w[1] = (t * t - 1.0) * (t - 2.0) / 2.0;
  w[2] = -t * (t + 1.0) * (t - 2.0) / 2.0;
  w[3] = t * (t * t - 1.0) / 6.0;
}

} // namespace

double HField::eval(const Eigen::VectorXd& x) const {
  const double xlast = x[x.size() - 1];
  switch (kind_) {
    case Kind::ExpDecay:
      return std::exp(a_ * (1.0 - xlast));
    case Kind::PowerDecay:
      return std::pow(xlast, -a_);
    case Kind::Sampled: {
      if (x.size() != 3)
        throw invalid_argument("HField: sampled fields are defined on H^2 only");
      const double r = std::acosh(std::max(1.0, xlast));
      if (r > r_.nodes[r_.size() - 1]) return 0.0;
      double ang = std::atan2(x[1], x[0]);
      if (ang < 0.0) ang += 2.0 * M_PI;

      const int na = angle_.size(), nr = r_.size();
      const double ta = ang / angle_.spacing();
      int ia = static_cast<int>(std::floor(ta));
      double wa[4];
      cubic_weights(ta - ia, wa);
      const double tr = r / r_.spacing();
      int ir = std::clamp(static_cast<int>(std::floor(tr)), 1, nr - 3);
      double wr[4];
      cubic_weights(tr - ir, wr);
      double acc = 0.0;
      for (int da = 0; da < 4; ++da) {
        const int ja = ((ia - 1 + da) % na + na) % na;
        for (int dr = 0; dr < 4; ++dr)
          acc += wa[da] * wr[dr] * values_[static_cast<Eigen::Index>(ja) * nr + (ir - 1 + dr)];
      }
      return acc;
    }
  }
  return 0.0;
}

} // namespace igt::hyper
