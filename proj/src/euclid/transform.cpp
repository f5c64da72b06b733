#include "igt/euclid/transform.hpp"

#include <cmath>
#include <complex>
#include <vector>

#include "igt/errors.hpp"
#include "igt/numkit/basis.hpp"
#include "igt/numkit/fft.hpp"
#include "igt/numkit/reduce.hpp"
#include "igt/numkit/sphere.hpp"
#include "igt/parallel.hpp"

namespace igt::euclid {

namespace {

// Tensor Gauss-Legendre integral of f(s*theta + sum u_i b_i, x'') over the
// box [-L, L]^k in theta-perp.
double plane_box_integral(const ScalarFieldRn& f, const Eigen::VectorXd& theta, double s,
                          const Eigen::VectorXd& xpp, const Eigen::MatrixXd& basis, double L,
                          int order) {
  const int k = static_cast<int>(basis.cols());
  Eigen::VectorXd gx, gw;
  numkit::gauss_legendre_rule(order, gx, gw);
  gx *= L;
  gw *= L;

  const Eigen::VectorXd base = s * theta;
  std::size_t total = 1;
  for (int a = 0; a < k; ++a) total *= static_cast<std::size_t>(order);
  std::vector<double> terms(total);
  std::vector<int> idx(k, 0);
  Eigen::VectorXd xp(theta.size());
  for (std::size_t t = 0; t < total; ++t) {
    xp = base;
    double w = 1.0;
    for (int a = 0; a < k; ++a) {
      xp += gx[idx[a]] * basis.col(a);
      w *= gw[idx[a]];
    }
    terms[t] = w * f.eval_split(xp, xpp);
    int a = k - 1;
    while (a >= 0 && ++idx[a] == order) idx[a--] = 0;
  }
  return numkit::pairwise_sum(terms);
}

// Radial truncated integral of the counterexample family over theta-perp:
// sigma_{k-1} int_0^Lambda f0(sqrt(s^2 + rho^2)) rho^{k-1} drho, times the
// Gaussian factor in x''.
double f0_truncated_radial(int k, double p, double delta, double s, double xppSq, double lambda,
                           double lambdaLow, int order) {
  const double sig = numkit::sphere_surface_area(k - 1);
  const double gf = std::exp(-xppSq);
  auto integrand = [&](double rho) {
    return std::pow(rho, k - 1) * f0_radial_profile(std::hypot(s, rho), k, p, delta);
  };
  // Dyadic panels keep the slowly varying log factor well resolved.
  double acc = 0.0;
  double lo = lambdaLow;
  if (lo == 0.0) {
    const double first = std::min(1.0, lambda);
    acc += numkit::integrate_gl(integrand, 0.0, first, order);
    lo = first;
  }
  while (lo < lambda) {
    const double hi = std::min(2.0 * lo, lambda);
    acc += numkit::integrate_gl(integrand, lo, hi, order);
    lo = hi;
  }
  return sig * gf * acc;
}

} // namespace

double forward_plane_integral(const ScalarFieldRn& f, const Eigen::VectorXd& theta, double s,
                              const Eigen::VectorXd& xpp, int order) {
  const int k = f.k();
  if (theta.size() != k + 1 || xpp.size() != f.n() - k - 1)
    throw invalid_argument("forward_plane_integral: theta/xpp sizes inconsistent with field");

  if (f.kind() == ScalarFieldRn::Kind::CounterexampleF0) {
    // Dyadic Cauchy test on the radial truncations.
    const double xppSq = xpp.squaredNorm();
    double prevLambda = 0.0, lambda = 1.0, total = 0.0;
    double prevIncrement = std::numeric_limits<double>::infinity();
    for (int j = 0; j < 48; ++j) {
      const double inc =
          f0_truncated_radial(k, f.f0_p(), f.f0_delta(), s, xppSq, lambda, prevLambda, order);
      total += inc;
      if (inc < 1e-12 * std::abs(total)) return total;
      if (j > 8 && inc > 0.9 * prevIncrement)
        throw divergence_error("forward_plane_integral: truncated values fail the Cauchy test "
                               "(divergent plane integral)",
                               total);
      prevIncrement = inc;
      prevLambda = lambda;
      lambda *= 2.0;
    }
    throw divergence_error("forward_plane_integral: no convergence within radius 2^48", total);
  }

  const double L = f.support_halfwidth();
  const Eigen::MatrixXd basis =
      numkit::perp_basis_in_span(Eigen::MatrixXd::Identity(k + 1, k + 1), theta);
  return plane_box_integral(f, theta, s, xpp, basis, L, order);
}

RestrictedSinogram forward_restricted(const ScalarFieldRn& f, SinogramGrids grids,
                                      const ForwardOptions& opts) {
  if (grids.n() != f.n() || grids.k() != f.k())
    throw invalid_argument("forward_restricted: grids do not match the field's (n, k)");
  if (!grids.s_symmetric())
    throw precondition_error("forward_restricted: s-grid must be symmetric about 0");

  RestrictedSinogram sg = RestrictedSinogram::zeros(f.n(), std::move(grids));
  const auto& quad = sg.grids.theta;
  const int ns = sg.ns(), nx = sg.nxpp();

  // Canonical directions: one representative per antipodal pair; the mirror
  // entry is copied so that phi(theta, s) == phi(-theta, -s) bit-exactly.
  std::vector<int> canonical;
  for (int i = 0; i < quad.size(); ++i)
    if (i <= quad.antipode[i]) canonical.push_back(i);

  const int k = f.k();
  const bool boxPath = std::isfinite(f.support_halfwidth());
  Eigen::MatrixXd identity = Eigen::MatrixXd::Identity(k + 1, k + 1);

  const std::size_t jobs = canonical.size() * static_cast<std::size_t>(nx);
  parallel_for(jobs, opts.threads, [&](std::size_t job) {
    const int it = canonical[job / nx];
    const int ix = static_cast<int>(job % nx);
    const Eigen::VectorXd theta = quad.point(it);
    const Eigen::VectorXd xpp = sg.grids.xpp_point(ix);
    const int ia = quad.antipode[it];
    if (boxPath) {
      const Eigen::MatrixXd basis = numkit::perp_basis_in_span(identity, theta);
      const double L = f.support_halfwidth();
      for (int is = 0; is < ns; ++is) {
        const double v = plane_box_integral(f, theta, sg.grids.s.nodes[is], xpp, basis, L,
                                            opts.planeOrder);
        sg.at(it, is, ix) = v;
        sg.at(ia, ns - 1 - is, ix) = v;
      }
    } else {
      for (int is = 0; is < ns; ++is) {
        const double v = forward_plane_integral(f, theta, sg.grids.s.nodes[is], xpp,
                                                opts.planeOrder);
        sg.at(it, is, ix) = v;
        sg.at(ia, ns - 1 - is, ix) = v;
      }
    }
  });
  return sg;
}

namespace {

// Cubic interpolation of one sinogram row phi(theta_i, . , x''_ix) at s;
// zero outside the grid.
double interp_row(const RestrictedSinogram& phi, int it, int ix, double s, bool& inRange) {
  const auto& g = phi.grids.s;
  const int ns = g.size();
  if (s < g.nodes[0] || s > g.nodes[ns - 1]) {
    inRange = false;
    return 0.0;
  }
  inRange = true;
  const double h = g.spacing();
  const double t = (s - g.nodes[0]) / h;
  int c = static_cast<int>(std::floor(t));
  c = std::clamp(c, 1, ns - 3);
  const double u = t - c;
  const double w0 = -u * (u - 1.0) * (u - 2.0) / 6.0;
  const double w1 = (u * u - 1.0) * (u - 2.0) / 2.0;
  const double w2 = -u * (u + 1.0) * (u - 2.0) / 2.0;
  const double w3 = u * (u * u - 1.0) / 6.0;
  return w0 * phi.at(it, c - 1, ix) + w1 * phi.at(it, c, ix) + w2 * phi.at(it, c + 1, ix) +
         w3 * phi.at(it, c + 2, ix);
}

} // namespace

double dual_transform(const RestrictedSinogram& phi, int xppFlat, const Eigen::VectorXd& xp,
                      double t, const DualOptions& opts) {
  const auto& quad = phi.grids.theta;
  if (xp.size() != phi.k() + 1) throw invalid_argument("dual_transform: x' must have size k+1");
  if (xppFlat < 0 || xppFlat >= phi.nxpp())
    throw invalid_argument("dual_transform: x'' slice index out of range");

  const double wsum = quad.weights.sum();
  std::vector<double> terms(quad.size());
  double missing = 0.0;
  for (int i = 0; i < quad.size(); ++i) {
    bool inRange = true;
    const double sq = xp.dot(quad.point(i)) + t;
    terms[i] = quad.weights[i] * interp_row(phi, i, xppFlat, sq, inRange);
    if (!inRange) missing += quad.weights[i];
  }
  if (missing > opts.coverageTol * wsum)
    throw coverage_error("dual_transform: s-range exceeded for " +
                         std::to_string(100.0 * missing / wsum) + "% of the quadrature weight");
  return numkit::pairwise_sum(terms) / wsum;
}

double invert_dual_formula_k1(const RestrictedSinogram& phi, const Eigen::VectorXd& xp,
                              int xppFlat, double epsilon, double tMax,
                              const InvertDualOptions& opts) {
  if (phi.k() != 1) throw unsupported_dimension("invert_dual_formula_k1: k must be 1");
  if (!(epsilon > 0.0)) throw invalid_argument("invert_dual_formula_k1: epsilon > 0 required");
  const double sEnd = phi.grids.s.nodes[phi.ns() - 1];
  if (tMax < sEnd + xp.norm())
    throw precondition_error(
        "invert_dual_formula_k1: tMax must cover the s-range plus |x'| so the shifted dual has "
        "fully decayed");

  const double R0 = dual_transform(phi, xppFlat, xp, 0.0);
  // Out-of-range shifted samples count as zero here: for t near tMax the
  // whole circle has left the s-grid by construction.
  const DualOptions noCoverage{.coverageTol = 2.0};
  auto integrand = [&](double t) {
    return (R0 - dual_transform(phi, xppFlat, xp, t, noCoverage)) / (t * t);
  };

  // Geometric panels from epsilon up to tMax.
  auto panel = [&](double a, double b) {
    return numkit::integrate_gl(integrand, a, b, opts.panelOrder);
  };
  double acc = 0.0;
  double lo = epsilon;
  while (lo < tMax) {
    const double hi = std::min(2.0 * lo, tMax);
    acc += panel(lo, hi);
    lo = hi;
  }

  // Halve epsilon until two successive values agree; the remaining gap is a
  // geometric series with ratio ~1/2, so add the last difference once more.
  double prev = acc;
  double eps = epsilon;
  std::string trace;
  for (int m = 0; m < opts.maxHalvings; ++m) {
    acc += panel(0.5 * eps, eps);
    eps *= 0.5;
    const double diff = acc - prev;
    trace += std::to_string(diff) + " ";
    if (std::abs(diff) < opts.tol)
      return (acc + diff + R0 / tMax) / M_PI;
    prev = acc;
  }
  throw no_convergence_error("invert_dual_formula_k1: epsilon-halvings did not stabilize within " +
                                 std::to_string(opts.maxHalvings) + " steps",
                             trace);
}

PsiCartesian psi_cartesian(const RestrictedSinogram& phi, const InvertFourierOptions& opts) {
  if (phi.k() != 1)
    throw unsupported_dimension("psi_cartesian: angular resampling implemented for k = 1");

  const int ntheta = phi.ntheta(), ns = phi.ns(), nx = phi.nxpp();
  // s-decay precondition.
  double peak = 0.0, edge = 0.0;
  for (int it = 0; it < ntheta; ++it)
    for (int ix = 0; ix < nx; ++ix) {
      for (int is = 0; is < ns; ++is) peak = std::max(peak, std::abs(phi.at(it, is, ix)));
      edge = std::max({edge, std::abs(phi.at(it, 0, ix)), std::abs(phi.at(it, ns - 1, ix))});
    }
  if (peak > 0.0 && edge > opts.tailTol * peak)
    throw precondition_error("psi_cartesian: sinogram has not decayed at the s-grid ends");

  const double hs = phi.grids.s.spacing();
  PsiCartesian psi;
  psi.freqMax = opts.freqMax > 0.0 ? opts.freqMax : M_PI / (2.0 * hs);
  const int nf = opts.freqCount;
  psi.ny = opts.cartCount > 0 ? opts.cartCount : nf;
  const int ny = psi.ny;
  const double freqMax = psi.freqMax;

  Eigen::VectorXd freqs(nf);
  for (int q = 0; q < nf; ++q) freqs[q] = freqMax * q / (nf - 1);
  const double dy = 2.0 * freqMax / (ny - 1);

  psi.slices.assign(static_cast<std::size_t>(nx), Eigen::MatrixXcd());
  parallel_for(static_cast<std::size_t>(nx), opts.threads, [&](std::size_t ixs) {
    const int ix = static_cast<int>(ixs);
    Eigen::MatrixXcd psiPolar(ntheta, nf);
    Eigen::VectorXd row(ns);
    for (int it = 0; it < ntheta; ++it) {
      for (int is = 0; is < ns; ++is) row[is] = phi.at(it, is, ix);
      const auto ft = numkit::continuous_ft_1d(
          phi.grids.s, std::span<const double>(row.data(), static_cast<std::size_t>(ns)),
          std::span<const double>(freqs.data(), static_cast<std::size_t>(nf)), 1.0);
      psiPolar.row(it) = ft.values.transpose();
    }

    // Polar -> Cartesian resampling, bilinear in (eta, angle), zero-padded
    // beyond freqMax.
    Eigen::MatrixXcd cart(ny, ny);
    const double dAng = 2.0 * M_PI / ntheta;
    const double dEta = freqMax / (nf - 1);
    for (int j2 = 0; j2 < ny; ++j2) {
      const double y2 = -freqMax + j2 * dy;
      for (int j1 = 0; j1 < ny; ++j1) {
        const double y1 = -freqMax + j1 * dy;
        const double eta = std::hypot(y1, y2);
        if (eta > freqMax) {
          cart(j1, j2) = 0.0;
          continue;
        }
        double ang = std::atan2(y2, y1);
        if (ang < 0.0) ang += 2.0 * M_PI;
        const double ta = ang / dAng;
        int ia = static_cast<int>(std::floor(ta));
        const double fa = ta - ia;
        ia %= ntheta;
        const int ib = (ia + 1) % ntheta;
        const double te = eta / dEta;
        const int ie = std::min(static_cast<int>(std::floor(te)), nf - 2);
        const double fe = te - ie;
        cart(j1, j2) = (1.0 - fa) * ((1.0 - fe) * psiPolar(ia, ie) + fe * psiPolar(ia, ie + 1)) +
                       fa * ((1.0 - fe) * psiPolar(ib, ie) + fe * psiPolar(ib, ie + 1));
      }
    }
    psi.slices[ixs] = std::move(cart);
  });
  return psi;
}

ScalarFieldRn invert_psi_cartesian(const PsiCartesian& psi, const RestrictedSinogram& phi,
                                   const BoxGrid& targetXp, int threads) {
  targetXp.validate();
  if (targetXp.axes() != 2) throw invalid_argument("invert_psi_cartesian: target must be 2-D in x'");
  if (psi.slices.size() != static_cast<std::size_t>(phi.nxpp()))
    throw invalid_argument("invert_psi_cartesian: slice count mismatch");

  const int ntheta = phi.ntheta();
  const int ny = psi.ny, nx = phi.nxpp();
  const double freqMax = psi.freqMax;
  const double dy = 2.0 * freqMax / (ny - 1);

  // Bilinear angular resolution guard.
  double rTarget = 0.0;
  for (int a = 0; a < 2; ++a)
    rTarget += std::pow(std::max(std::abs(targetXp.lo[a]), std::abs(targetXp.hi[a])), 2);
  rTarget = std::sqrt(rTarget);
  if (ntheta < static_cast<int>(std::ceil(0.5 * freqMax * rTarget)))
    throw resolution_error("invert_psi_cartesian: theta grid too coarse for the requested "
                           "bandwidth (need >= ceil(freqMax * |target| / 2) angles)");

  const int nx1 = targetXp.dims[0], nx2 = targetXp.dims[1];
  Eigen::ArrayXd out(static_cast<Eigen::Index>(nx1) * nx2 * nx);

  parallel_for(static_cast<std::size_t>(nx), threads, [&](std::size_t ixs) {
    const int ix = static_cast<int>(ixs);
    const Eigen::MatrixXcd& cart = psi.slices[ixs];
    Eigen::MatrixXcd pass1(nx1, ny); // (x1, y2)
    Eigen::VectorXcd terms(ny);
    for (int j2 = 0; j2 < ny; ++j2)
      for (int i1 = 0; i1 < nx1; ++i1) {
        const double x1 = targetXp.node(0, i1);
        for (int j1 = 0; j1 < ny; ++j1) {
          const double y1 = -freqMax + j1 * dy;
          const double ph = -x1 * y1;
          terms[j1] = cart(j1, j2) * std::complex<double>(std::cos(ph), std::sin(ph)) * dy;
        }
        pass1(i1, j2) = numkit::pairwise_sum(
            std::span<const std::complex<double>>(terms.data(), static_cast<std::size_t>(ny)));
      }
    const double norm = 1.0 / (4.0 * M_PI * M_PI);
    for (int i1 = 0; i1 < nx1; ++i1)
      for (int i2 = 0; i2 < nx2; ++i2) {
        const double x2 = targetXp.node(1, i2);
        for (int j2 = 0; j2 < ny; ++j2) {
          const double y2 = -freqMax + j2 * dy;
          const double ph = -x2 * y2;
          terms[j2] = pass1(i1, j2) * std::complex<double>(std::cos(ph), std::sin(ph)) * dy;
        }
        const auto v = numkit::pairwise_sum(
            std::span<const std::complex<double>>(terms.data(), static_cast<std::size_t>(ny)));
        // Output layout: x' axes slowest, then x'' flat (matches BoxGrid
        // with axes [x'1, x'2, xpp...]).
        out[(static_cast<Eigen::Index>(i1) * nx2 + i2) * nx + ix] = norm * v.real();
      }
  });

  // Assemble the sampled field box: target x' axes + the sinogram x'' axes.
  const int n = phi.n;
  BoxGrid box;
  box.lo.resize(n);
  box.hi.resize(n);
  box.dims.resize(n);
  for (int a = 0; a < 2; ++a) {
    box.lo[a] = targetXp.lo[a];
    box.hi[a] = targetXp.hi[a];
    box.dims[a] = targetXp.dims[a];
  }
  for (std::size_t a = 0; a < phi.grids.xpp.size(); ++a) {
    const auto& g = phi.grids.xpp[a];
    box.lo[2 + a] = g.nodes[0];
    box.hi[2 + a] = g.nodes[g.size() - 1];
    box.dims[2 + a] = g.size();
  }
  return ScalarFieldRn::sampled(n, phi.k(), box, out);
}

ScalarFieldRn invert_fourier_slice(const RestrictedSinogram& phi, const BoxGrid& targetXp,
                                   const InvertFourierOptions& opts) {
  return invert_psi_cartesian(psi_cartesian(phi, opts), phi, targetXp, opts.threads);
}

DivergenceScan divergence_scan_f0(int n, int k, double p, double delta,
                                  std::span<const double> lambdaSchedule, const PlaneParam& probe,
                                  int panelOrder) {
  if (k < 1 || k > n - 1) throw invalid_argument("divergence_scan_f0: 1 <= k <= n-1 required");
  for (std::size_t j = 1; j < lambdaSchedule.size(); ++j)
    if (!(lambdaSchedule[j] > lambdaSchedule[j - 1]))
      throw invalid_argument("divergence_scan_f0: schedule must be strictly increasing");

  const double xppSq = probe.xpp.squaredNorm();
  DivergenceScan scan;
  scan.lambdas = Eigen::Map<const Eigen::VectorXd>(lambdaSchedule.data(),
                                                   static_cast<Eigen::Index>(lambdaSchedule.size()));
  scan.values.resize(scan.lambdas.size());
  double acc = 0.0, lo = 0.0;
  for (Eigen::Index j = 0; j < scan.lambdas.size(); ++j) {
    acc += f0_truncated_radial(k, p, delta, probe.s, xppSq, scan.lambdas[j], lo, panelOrder);
    scan.values[j] = acc;
    lo = scan.lambdas[j];
  }
  scan.strictly_increasing = true;
  for (Eigen::Index j = 1; j < scan.values.size(); ++j)
    if (!(scan.values[j] > scan.values[j - 1])) scan.strictly_increasing = false;
  return scan;
}

} // namespace igt::euclid
