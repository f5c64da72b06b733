#include "igt/range/range.hpp"

#include <cmath>
#include <complex>

#include "igt/errors.hpp"
#include "igt/numkit/reduce.hpp"

namespace igt::range {

using euclid::RestrictedSinogram;

double check_evenness(const RestrictedSinogram& phi) {
  const auto& quad = phi.grids.theta;
  if (!phi.grids.s_symmetric())
    throw precondition_error("check_evenness: s-grid is not symmetrically closed");
  if (quad.antipode.empty())
    throw precondition_error("check_evenness: theta grid carries no antipode map");

  const int ns = phi.ns(), nx = phi.nxpp();
  double worst = 0.0;
  for (int it = 0; it < quad.size(); ++it) {
    const int ia = quad.antipode[it];
    for (int is = 0; is < ns; ++is)
      for (int ix = 0; ix < nx; ++ix)
        worst = std::max(worst, std::abs(phi.at(it, is, ix) - phi.at(ia, ns - 1 - is, ix)));
  }
  return worst;
}

namespace {

// Backward/central/forward second-order first derivative along one stored
// axis of the sinogram, by index displacement.
struct AxisView {
  const RestrictedSinogram* phi;
  int it, is, ix;
};

} // namespace

SeminormReport estimate_seminorm(const RestrictedSinogram& phi, int m) {
  if (m < 0 || m > 2)
    throw invalid_argument("estimate_seminorm: m in {0,1,2} (higher orders are out of numerical "
                           "reach at desk grids)");
  if (m >= 1 && phi.k() != 1)
    throw unsupported_dimension("estimate_seminorm: theta-differencing implemented for k = 1");

  const int ntheta = phi.ntheta(), ns = phi.ns(), nx = phi.nxpp();
  const int nxppAxes = static_cast<int>(phi.grids.xpp.size());
  const double hAng = 2.0 * M_PI / ntheta;
  const double hs = phi.grids.s.spacing();

  SeminormReport rep;
  rep.m = m;
  rep.gridResolutionUsed.push_back(ntheta);
  rep.gridResolutionUsed.push_back(ns);
  for (const auto& g : phi.grids.xpp) rep.gridResolutionUsed.push_back(g.size());

  // x'' multi-index helpers on the flattened trailing axes.
  std::vector<int> xStride(nxppAxes, 1);
  for (int a = nxppAxes - 2; a >= 0; --a)
    xStride[a] = xStride[a + 1] * phi.grids.xpp[a + 1].size();
  auto xIndex = [&](int ix, int a) { return (ix / xStride[a]) % phi.grids.xpp[a].size(); };

  auto value = [&](int it, int is, int ix) { return phi.at(it, is, ix); };
  auto thetaN = [&](int it, int d) { return ((it + d) % ntheta + ntheta) % ntheta; };

  double sup = 0.0;
  double d3scale = 0.0;
  for (int it = 0; it < ntheta; ++it) {
    const double ang = 2.0 * M_PI * it / ntheta;
    const double c = std::cos(ang), s = std::sin(ang);
    for (int is = 1; is + 1 < ns; ++is) {
      const double sv = phi.grids.s.nodes[is];
      for (int ix = 0; ix < nx; ++ix) {
        bool interior = true;
        double xppAbs = 0.0;
        for (int a = 0; a < nxppAxes; ++a) {
          const int i = xIndex(ix, a);
          if (i == 0 || i + 1 == phi.grids.xpp[a].size()) interior = false;
          const double xa = phi.grids.xpp[a].nodes[i];
          xppAbs += xa * xa;
        }
        if (!interior) continue;
        xppAbs = std::sqrt(xppAbs);
        const double weight = std::pow(1.0 + std::abs(sv) + xppAbs, m);

        const double v0 = value(it, is, ix);
        double localMax = std::abs(v0);

        if (m >= 1) {
          // First derivatives: angle, s, x'' axes.
          const double dA = (value(thetaN(it, 1), is, ix) - value(thetaN(it, -1), is, ix)) /
                            (2.0 * hAng);
          const double dS = (value(it, is + 1, ix) - value(it, is - 1, ix)) / (2.0 * hs);
          // Cartesian derivatives of the homogeneous extension.
          localMax = std::max({localMax, std::abs(-s * dA), std::abs(c * dA), std::abs(dS)});
          for (int a = 0; a < nxppAxes; ++a) {
            const double hx = phi.grids.xpp[a].spacing();
            const double dX = (value(it, is, ix + xStride[a]) - value(it, is, ix - xStride[a])) /
                              (2.0 * hx);
            localMax = std::max(localMax, std::abs(dX));
          }
          if (m >= 2) {
            const double dAA = (value(thetaN(it, 1), is, ix) - 2.0 * v0 +
                                value(thetaN(it, -1), is, ix)) /
                               (hAng * hAng);
            const double dSS =
                (value(it, is + 1, ix) - 2.0 * v0 + value(it, is - 1, ix)) / (hs * hs);
            const double dAS = (value(thetaN(it, 1), is + 1, ix) -
                                value(thetaN(it, 1), is - 1, ix) -
                                value(thetaN(it, -1), is + 1, ix) +
                                value(thetaN(it, -1), is - 1, ix)) /
                               (4.0 * hAng * hs);
            // Homogeneous-extension Hessian in the x' coordinates:
            // Hess = phi_aa grad(a) grad(a)^T + phi_a Hess(a), |x'| = 1.
            const double h11 = s * s * dAA + 2.0 * c * s * dA;
            const double h12 = -c * s * dAA + (s * s - c * c) * dA;
            const double h22 = c * c * dAA - 2.0 * c * s * dA;
            localMax = std::max({localMax, std::abs(h11), std::abs(h12), std::abs(h22),
                                 std::abs(dSS), std::abs(-s * dAS), std::abs(c * dAS)});
            for (int a = 0; a < nxppAxes; ++a) {
              const double hx = phi.grids.xpp[a].spacing();
              const double dXX = (value(it, is, ix + xStride[a]) - 2.0 * v0 +
                                  value(it, is, ix - xStride[a])) /
                                 (hx * hx);
              const double dSX = (value(it, is + 1, ix + xStride[a]) -
                                  value(it, is + 1, ix - xStride[a]) -
                                  value(it, is - 1, ix + xStride[a]) +
                                  value(it, is - 1, ix - xStride[a])) /
                                 (4.0 * hs * hx);
              const double dAX = (value(thetaN(it, 1), is, ix + xStride[a]) -
                                  value(thetaN(it, 1), is, ix - xStride[a]) -
                                  value(thetaN(it, -1), is, ix + xStride[a]) +
                                  value(thetaN(it, -1), is, ix - xStride[a])) /
                                 (4.0 * hAng * hx);
              localMax = std::max({localMax, std::abs(dXX), std::abs(dSX), std::abs(-s * dAX),
                                   std::abs(c * dAX)});
              for (int b = a + 1; b < nxppAxes; ++b) {
                const double hb = phi.grids.xpp[b].spacing();
                const double dXY =
                    (value(it, is, ix + xStride[a] + xStride[b]) -
                     value(it, is, ix + xStride[a] - xStride[b]) -
                     value(it, is, ix - xStride[a] + xStride[b]) +
                     value(it, is, ix - xStride[a] - xStride[b])) /
                    (4.0 * hx * hb);
                localMax = std::max(localMax, std::abs(dXY));
              }
            }
          }
        }
        sup = std::max(sup, weight * localMax);

        // Third-derivative scale in s for the resolution check.
        if (is + 2 < ns && is >= 2) {
          const double d3 = (value(it, is + 2, ix) - 2.0 * value(it, is + 1, ix) +
                             2.0 * value(it, is - 1, ix) - value(it, is - 2, ix)) /
                            (2.0 * hs * hs * hs);
          d3scale = std::max(d3scale, std::abs(d3));
        }
      }
    }
  }

  if (m >= 1 && sup > 0.0 && hs * hs * d3scale > 0.01 * sup)
    throw resolution_error("estimate_seminorm: grid spacing too coarse (h^2 * third-derivative "
                           "scale exceeds 1% of the seminorm value)");

  rep.value = sup;
  return rep;
}

namespace {

std::vector<Eigen::VectorXi> homogeneous_multi_indices(int vars, int degree) {
  std::vector<Eigen::VectorXi> out;
  Eigen::VectorXi idx = Eigen::VectorXi::Zero(vars);
  // Lexicographic enumeration of exponent vectors summing to `degree`.
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == vars - 1) {
      idx[pos] = left;
      out.push_back(idx);
      return;
    }
    for (int e = left; e >= 0; --e) {
      idx[pos] = e;
      rec(pos + 1, left - e);
    }
  };
  rec(0, degree);
  return out;
}

} // namespace

MomentPolynomial check_moment_condition(const RestrictedSinogram& phi, int m,
                                        const MomentOptions& opts) {
  if (m < 0) throw invalid_argument("check_moment_condition: m >= 0 required");
  const int ntheta = phi.ntheta(), ns = phi.ns(), nx = phi.nxpp();
  const int kp1 = phi.k() + 1;

  // s-decay precondition.
  double peak = 0.0, edge = 0.0;
  for (int it = 0; it < ntheta; ++it)
    for (int ix = 0; ix < nx; ++ix) {
      for (int is = 0; is < ns; ++is) peak = std::max(peak, std::abs(phi.at(it, is, ix)));
      edge = std::max({edge, std::abs(phi.at(it, 0, ix)), std::abs(phi.at(it, ns - 1, ix))});
    }
  if (peak > 0.0 && edge > opts.tailTol * peak)
    throw precondition_error("check_moment_condition: sinogram has not decayed at the s-ends");

  const auto alphas = homogeneous_multi_indices(kp1, m);
  const int nMono = static_cast<int>(alphas.size());
  if (ntheta < 3 * nMono)
    throw precondition_error("check_moment_condition: need at least 3x as many theta nodes as "
                             "degree-" + std::to_string(m) + " monomials");

  // Weighted design matrix over the theta grid.
  const auto& quad = phi.grids.theta;
  Eigen::VectorXd w = quad.weights / quad.weights.sum();
  Eigen::MatrixXd A(ntheta, nMono);
  for (int it = 0; it < ntheta; ++it) {
    const Eigen::VectorXd th = quad.point(it);
    for (int j = 0; j < nMono; ++j) {
      double mono = 1.0;
      for (int c = 0; c < kp1; ++c) mono *= std::pow(th[c], alphas[j][c]);
      A(it, j) = mono;
    }
  }
  const Eigen::VectorXd sqw = w.array().sqrt();
  const Eigen::MatrixXd Aw = sqw.asDiagonal() * A;
  {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(Aw);
    const double cond = svd.singularValues()(0) /
                        svd.singularValues()(svd.singularValues().size() - 1);
    if (!(cond < opts.condLimit))
      throw precondition_error("check_moment_condition: monomial Gram matrix is ill-conditioned "
                               "(cond > 1e8); enlarge the theta grid");
  }
  const Eigen::MatrixXd gram =
      Aw.transpose() * Aw + opts.ridge * Eigen::MatrixXd::Identity(nMono, nMono);
  const Eigen::LLT<Eigen::MatrixXd> llt(gram);

  // Moments mu_m(theta, x'') and |phi| |s|^m scale.
  const auto& sg = phi.grids.s;
  Eigen::MatrixXd mu(ntheta, nx);
  double absScale = 0.0;
  std::vector<double> terms(static_cast<std::size_t>(ns));
  for (int ix = 0; ix < nx; ++ix) {
    double rowScale = 0.0;
    for (int it = 0; it < ntheta; ++it) {
      double absAcc = 0.0;
      for (int is = 0; is < ns; ++is) {
        const double sm = std::pow(sg.nodes[is], m);
        terms[static_cast<std::size_t>(is)] = sg.weights[is] * phi.at(it, is, ix) * sm;
        absAcc += sg.weights[is] * std::abs(phi.at(it, is, ix) * sm);
      }
      mu(it, ix) = numkit::pairwise_sum(terms);
      rowScale += w[it] * absAcc * absAcc;
    }
    absScale = std::max(absScale, std::sqrt(rowScale));
  }

  MomentPolynomial poly;
  poly.degree = m;
  poly.multiIndices = alphas;
  poly.coefficients.assign(alphas.size(), Eigen::VectorXd(nx));
  double worst = 0.0;
  for (int ix = 0; ix < nx; ++ix) {
    const Eigen::VectorXd rhs = Aw.transpose() * (sqw.asDiagonal() * mu.col(ix));
    const Eigen::VectorXd c = llt.solve(rhs);
    for (int j = 0; j < nMono; ++j) poly.coefficients[static_cast<std::size_t>(j)][ix] = c[j];
    const double res = (sqw.asDiagonal() * (A * c - mu.col(ix))).norm();
    const double den = std::max((sqw.asDiagonal() * mu.col(ix)).norm(), absScale);
    if (den > 0.0) worst = std::max(worst, res / den);
  }
  poly.residual = worst;
  return poly;
}

euclid::ScalarFieldRn range_construct_f(const RestrictedSinogram& phi,
                                        const euclid::BoxGrid& targetXp,
                                        const RangeConstructOptions& opts) {
  const double evenness = check_evenness(phi);
  if (evenness > opts.evennessTol)
    throw numerical_error("range_construct_f: evenness violation " + std::to_string(evenness) +
                          " above threshold; input is not in the range (construction would be "
                          "direction-dependent)");

  euclid::PsiCartesian psi = euclid::psi_cartesian(phi, opts.fourier);

  // Explicit Fourier roundtrip along each x'' axis: psi_1 = F_2 psi followed
  // by F_2^{-1} on the matched conjugate grid.
  const int nAxes = static_cast<int>(phi.grids.xpp.size());
  const int ny = psi.ny;
  if (nAxes > 0) {
    std::vector<int> dims(nAxes), strides(nAxes, 1);
    for (int a = 0; a < nAxes; ++a) dims[a] = phi.grids.xpp[a].size();
    for (int a = nAxes - 2; a >= 0; --a) strides[a] = strides[a + 1] * dims[a + 1];
    const int nx = phi.nxpp();

    for (int axis = 0; axis < nAxes; ++axis) {
      const int na = dims[axis];
      const auto& g = phi.grids.xpp[axis];
      const double dx = g.spacing();
      const double dOmega = 2.0 * M_PI / (na * dx);
      Eigen::MatrixXcd fwd(na, na), inv(na, na);
      for (int q = 0; q < na; ++q) {
        const double omega = (q - na / 2) * dOmega;
        for (int l = 0; l < na; ++l) {
          const double ph = g.nodes[l] * omega;
          fwd(q, l) = std::complex<double>(std::cos(ph), std::sin(ph)) * dx;
          inv(l, q) = std::complex<double>(std::cos(ph), -std::sin(ph)) * (dOmega / (2.0 * M_PI));
        }
      }
      const Eigen::MatrixXcd pair = inv * fwd; // identity up to roundoff
      // Apply along the axis for every (y-cell, complementary x'' index).
      for (int j2 = 0; j2 < ny; ++j2)
        for (int j1 = 0; j1 < ny; ++j1) {
          for (int base = 0; base < nx; ++base) {
            if ((base / strides[axis]) % na != 0) continue;
            Eigen::VectorXcd pencil(na);
            for (int l = 0; l < na; ++l)
              pencil[l] = psi.slices[static_cast<std::size_t>(base + l * strides[axis])](j1, j2);
            pencil = pair * pencil;
            for (int l = 0; l < na; ++l)
              psi.slices[static_cast<std::size_t>(base + l * strides[axis])](j1, j2) = pencil[l];
          }
        }
    }
  }

  return euclid::invert_psi_cartesian(psi, phi, targetXp, opts.fourier.threads);
}

RangeVerdict range_verdict(const RestrictedSinogram& phi, const RangeVerdictOptions& opts) {
  RangeVerdict verdict;
  auto add = [&](std::string name, int m, double value, double threshold, bool pass,
                 std::string note = {}) {
    verdict.criteria.push_back({std::move(name), m, value, threshold, pass, std::move(note)});
  };

  const double evenness = check_evenness(phi);
  add("evenness", -1, evenness, opts.tol.evenness, evenness <= opts.tol.evenness);

  for (int m = 0; m <= 2; ++m) {
    try {
      const auto rep = estimate_seminorm(phi, m);
      add("seminorm", m, rep.value, std::numeric_limits<double>::infinity(),
          std::isfinite(rep.value));
    } catch (const precondition_error& e) {
      add("seminorm", m, std::numeric_limits<double>::quiet_NaN(),
          std::numeric_limits<double>::infinity(), false, e.what());
    }
  }

  for (int m = 0; m <= opts.mMax; ++m) {
    try {
      const auto poly = check_moment_condition(phi, m);
      add("moment", m, poly.residual, opts.tol.moment, poly.residual <= opts.tol.moment);
    } catch (const precondition_error& e) {
      add("moment", m, std::numeric_limits<double>::quiet_NaN(), opts.tol.moment, false, e.what());
    }
  }

  if (evenness <= opts.tol.evenness) {
    RangeConstructOptions cOpts;
    cOpts.fourier = opts.fourier;
    cOpts.evennessTol = opts.tol.evenness;
    const auto f = range_construct_f(phi, opts.targetXp, cOpts);
    const auto back = euclid::forward_restricted(f, phi.grids, opts.forward);
    const double num = std::sqrt((back.values - phi.values).square().sum());
    const double den = std::sqrt(phi.values.square().sum());
    const double rel = den > 0.0 ? num / den : num;
    add("roundtrip", -1, rel, opts.tol.roundtrip, rel <= opts.tol.roundtrip);
  } else {
    add("roundtrip", -1, std::numeric_limits<double>::quiet_NaN(), opts.tol.roundtrip, false,
        "skipped: evenness failed, construction would be direction-dependent");
  }

  verdict.pass = true;
  for (const auto& c : verdict.criteria)
    if (!c.pass) verdict.pass = false;
  return verdict;
}

} // namespace igt::range
