#include "igt/hyper/transform.hpp"

#include <cmath>
#include <vector>

#include "igt/errors.hpp"
#include "igt/numkit/grid.hpp"
#include "igt/numkit/reduce.hpp"
#include "igt/numkit/sphere.hpp"

namespace igt::hyper {

namespace {

numkit::SphereQuadrature sphere_quad_any(int d, int order, bool normalized) {
  if (d > 0) return numkit::make_sphere_quadrature(d, order, normalized);
  numkit::SphereQuadrature q;
  q.dim = 0;
  q.normalized = normalized;
  q.order = order;
  q.points.resize(2, 1);
  q.points << 1.0, -1.0;
  q.weights.setConstant(2, normalized ? 0.5 : 1.0);
  q.antipode = {1, 0};
  return q;
}

void composite_gl(double a, double b, int order, int panels, Eigen::VectorXd& x,
                  Eigen::VectorXd& w) {
  Eigen::VectorXd gx, gw;
  numkit::gauss_legendre_rule(order, gx, gw);
  x.resize(order * panels);
  w.resize(order * panels);
  const double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * h;
    for (int i = 0; i < order; ++i) {
      x[p * order + i] = mid + 0.5 * h * gx[i];
      w[p * order + i] = 0.5 * h * gw[i];
    }
  }
}

} // namespace

double HQuadrature::integrate(const HField& f) const {
  std::vector<double> terms(static_cast<std::size_t>(size()));
  for (int i = 0; i < size(); ++i)
    terms[static_cast<std::size_t>(i)] = weights[i] * f.eval(nodes.row(i).transpose());
  return numkit::pairwise_sum(terms);
}

HQuadrature hk_polar_quadrature(int k, double rMax, const HPolarOptions& opts) {
  if (k < 0) throw invalid_argument("hk_polar_quadrature: k >= 0 required");
  HQuadrature q;
  if (k == 0) {
    q.nodes = Eigen::MatrixXd::Ones(1, 1);
    q.weights = Eigen::VectorXd::Ones(1);
    return q;
  }
  Eigen::VectorXd rx, rw;
  composite_gl(0.0, rMax, opts.rOrder, opts.rPanels, rx, rw);
  const auto sq = sphere_quad_any(k - 1, opts.sphereOrder, false);
  const int N = static_cast<int>(rx.size()) * sq.size();
  q.nodes.resize(N, k + 1);
  q.weights.resize(N);
  int at = 0;
  for (int ir = 0; ir < rx.size(); ++ir) {
    const double sh = std::sinh(rx[ir]), ch = std::cosh(rx[ir]);
    const double wr = rw[ir] * std::pow(sh, k - 1);
    for (int is = 0; is < sq.size(); ++is, ++at) {
      q.nodes.row(at).head(k) = sh * sq.points.row(is);
      q.nodes(at, k) = ch;
      q.weights[at] = wr * sq.weights[is];
    }
  }
  return q;
}

HQuadrature hpolar_quadrature(int n, int k, double rMax, const HPolarOptions& opts) {
  if (n < 1 || k < 0 || k > n - 1)
    throw invalid_argument("hpolar_quadrature: need n >= 1 and 0 <= k <= n-1");
  Eigen::VectorXd rx, rw;
  composite_gl(0.0, rMax, opts.rOrder, opts.rPanels, rx, rw);
  const auto vq = sphere_quad_any(n - k - 1, opts.sphereOrder, false);
  const HQuadrature uq = hk_polar_quadrature(k, rMax, opts);

  HQuadrature q;
  const int N = static_cast<int>(rx.size()) * vq.size() * uq.size();
  q.nodes.resize(N, n + 1);
  q.weights.resize(N);
  int at = 0;
  for (int ir = 0; ir < rx.size(); ++ir) {
    const double sh = std::sinh(rx[ir]), ch = std::cosh(rx[ir]);
    const double wr = rw[ir] * std::pow(sh, n - k - 1) * std::pow(ch, k);
    for (int iv = 0; iv < vq.size(); ++iv) {
      for (int iu = 0; iu < uq.size(); ++iu, ++at) {
        q.nodes.row(at).setZero();
        q.nodes.row(at).head(n - k) = sh * vq.points.row(iv);
        q.nodes.row(at).tail(k + 1) += ch * uq.nodes.row(iu);
        q.weights[at] = wr * vq.weights[iv] * uq.weights[iu];
      }
    }
  }
  return q;
}

void HyperbolicComplexElement::validate(int n, int k) const {
  if (v.size() != n - k || w.coords.size() != n + 1)
    throw invalid_argument("HyperbolicComplexElement: v must have size n-k, w size n+1");
  if (std::abs(v.norm() - 1.0) > 1e-12)
    throw invalid_argument("HyperbolicComplexElement: |v| must be 1 within 1e-12");
  if (std::abs(lorentz_inner(w.coords, w.coords) + 1.0) > 1e-10)
    throw invalid_argument("HyperbolicComplexElement: [w,w] must equal -1");
  Eigen::VectorXd head = w.coords.head(n - k);
  head -= head.dot(v) * v;
  if (head.norm() > 1e-12)
    throw invalid_argument("HyperbolicComplexElement: w must lie in Rv + R^{k+1}");
}

FlaggedValueH hradon_forward_restricted(const HField& f, int n, int k,
                                        const HyperbolicComplexElement& element,
                                        const HRadonOptions& opts) {
  if (k < 1 || k > n - 1) throw invalid_argument("hradon_forward_restricted: 1 <= k <= n-1");
  element.validate(n, k);

  const BlockRotation rot = make_block_rotation(element.v, k);
  const Eigen::VectorXd zetaFull = rot.apply_inverse(element.w.coords);
  if (n - k - 1 > 0 && zetaFull.head(n - k - 1).norm() > 1e-10)
    throw numerical_error("hradon_forward_restricted: conjugated direction left the slice space");
  const Eigen::VectorXd zeta = zetaFull.tail(k + 2);

  // Frame of the slice space R^{k+2}: first column zeta; the geodesic
  // submanifold {eta : [eta, zeta] = 0} is frame * (0, H^k).
  const Eigen::MatrixXd frame = lorentz_frame(zeta);
  HPolarOptions popts;
  popts.rOrder = opts.rOrder;
  popts.rPanels = opts.rPanels;
  popts.sphereOrder = opts.sphereOrder;
  const HQuadrature hk = hk_polar_quadrature(k, opts.rMax, popts);

  std::vector<double> terms(static_cast<std::size_t>(hk.size()));
  Eigen::VectorXd full(n + 1);
  double tailMax = 0.0, peak = 0.0;
  const double outerBand = 0.5 * std::cosh(opts.rMax);
  for (int i = 0; i < hk.size(); ++i) {
    Eigen::VectorXd etaBlock = frame.rightCols(k + 1) * hk.nodes.row(i).transpose();
    full.setZero();
    full.tail(k + 2) = etaBlock;
    const double term = hk.weights[i] * f.eval(rot.apply(full));
    terms[static_cast<std::size_t>(i)] = term;
    peak = std::max(peak, std::abs(term));
    if (hk.nodes(i, k) > outerBand) tailMax = std::max(tailMax, std::abs(term));
  }
  FlaggedValueH out;
  out.value = numkit::pairwise_sum(terms);
  out.diverged = peak > 0.0 && tailMax > opts.tailTol * peak;
  return out;
}

HIdentityCheck duality_identity_h(const HField& f, int n,
                                  std::span<const Eigen::VectorXd> sigmas,
                                  const HDualityOptions& opts) {
  if (n < 2) throw invalid_argument("duality_identity_h: n >= 2 required");
  if (sigmas.size() < 2)
    throw invalid_argument("duality_identity_h: need at least 2 sigma directions");

  // Right side: int f(x) dx / x_{n+1}, plain polar decomposition.
  const HQuadrature hn = hpolar_quadrature(n, 0, opts.rMax, opts.polar);
  std::vector<double> rhsTerms(static_cast<std::size_t>(hn.size()));
  double peak = 0.0, tail = 0.0;
  const double outerBand = 0.5 * std::cosh(opts.rMax);
  for (int i = 0; i < hn.size(); ++i) {
    const double term = hn.weights[i] * f.eval(hn.nodes.row(i).transpose()) / hn.nodes(i, n);
    rhsTerms[static_cast<std::size_t>(i)] = term;
    peak = std::max(peak, std::abs(term));
    if (hn.nodes(i, n) > outerBand) tail = std::max(tail, std::abs(term));
  }
  if (peak > 0.0 && tail > 1e-10 * peak)
    throw precondition_error("duality_identity_h: integrand has not decayed at rMax (increase "
                             "rMax or use a faster-decaying field)");

  HIdentityCheck chk;
  chk.rhs = numkit::pairwise_sum(rhsTerms);

  // Left side per sigma: rho-quadrature of (Hf)(sigma cosh rho + e sinh rho)
  // / cosh rho, each Hf an integral over the geodesic frame * (0, H^{n-1}).
  Eigen::VectorXd rx, rw;
  composite_gl(-opts.rhoMax, opts.rhoMax, opts.rhoOrder, opts.rhoPanels, rx, rw);
  HPolarOptions geoOpts = opts.polar;
  const HQuadrature hk = hk_polar_quadrature(n - 1, opts.rMax, geoOpts);

  chk.lhsPerSigma.resize(static_cast<Eigen::Index>(sigmas.size()));
  for (std::size_t is = 0; is < sigmas.size(); ++is) {
    const Eigen::VectorXd& sigma = sigmas[is];
    if (sigma.size() != n || std::abs(sigma.norm() - 1.0) > 1e-10)
      throw invalid_argument("duality_identity_h: sigma must be a unit vector in R^n");
    std::vector<double> rhoTerms(static_cast<std::size_t>(rx.size()));
    std::vector<double> geoTerms(static_cast<std::size_t>(hk.size()));
    Eigen::VectorXd y(n + 1);
    for (int ir = 0; ir < rx.size(); ++ir) {
      y.head(n) = std::cosh(rx[ir]) * sigma;
      y[n] = std::sinh(rx[ir]);
      const Eigen::MatrixXd frame = lorentz_frame(y);
      for (int i = 0; i < hk.size(); ++i) {
        const Eigen::VectorXd eta = frame.rightCols(n) * hk.nodes.row(i).transpose();
        geoTerms[static_cast<std::size_t>(i)] = hk.weights[i] * f.eval(eta);
      }
      rhoTerms[static_cast<std::size_t>(ir)] =
          rw[ir] * numkit::pairwise_sum(geoTerms) / std::cosh(rx[ir]);
    }
    chk.lhsPerSigma[static_cast<Eigen::Index>(is)] = numkit::pairwise_sum(rhoTerms);
  }
  chk.lhs = chk.lhsPerSigma.mean();
  chk.relError =
      std::abs(chk.lhs - chk.rhs) / std::max({std::abs(chk.lhs), std::abs(chk.rhs), 1e-300});
  return chk;
}

HIdentityCheck slice_identity_check(const HField& f, int n, int k,
                                    const SliceIdentityOptions& opts) {
  if (k < 1 || k > n - 2) throw invalid_argument("slice_identity_check: 1 <= k <= n-2 required");

  // Left side: int_{S^{n-k-1}} dv int_{H^{k+1}} f(gamma~_v eta) deta with the
  // standard polar quadrature in the slice coordinates.
  const auto vq = sphere_quad_any(n - k - 1, opts.vOrder, false);
  const HQuadrature slice = hk_polar_quadrature(k + 1, opts.rMax, opts.polar);
  std::vector<double> vTerms(static_cast<std::size_t>(vq.size()));
  std::vector<double> inner(static_cast<std::size_t>(slice.size()));
  Eigen::VectorXd full(n + 1);
  for (int iv = 0; iv < vq.size(); ++iv) {
    const BlockRotation rot = make_block_rotation(vq.point(iv), k);
    for (int i = 0; i < slice.size(); ++i) {
      full.setZero();
      full.tail(k + 2) = slice.nodes.row(i).transpose();
      inner[static_cast<std::size_t>(i)] = slice.weights[i] * f.eval(rot.apply(full));
    }
    vTerms[static_cast<std::size_t>(iv)] = vq.weights[iv] * numkit::pairwise_sum(inner);
  }

  HIdentityCheck chk;
  chk.lhs = numkit::pairwise_sum(vTerms);

  // Right side: 2 int f(x) |x'|^{-(n-k-1)} dx through the split quadrature,
  // where |x'| = sinh r cancels most of the dnu weight.
  const HQuadrature hn = hpolar_quadrature(n, k, opts.rMax, opts.polar);
  std::vector<double> rhsTerms(static_cast<std::size_t>(hn.size()));
  for (int i = 0; i < hn.size(); ++i) {
    const double xprime = hn.nodes.row(i).head(n - k).norm();
    rhsTerms[static_cast<std::size_t>(i)] =
        hn.weights[i] * f.eval(hn.nodes.row(i).transpose()) / std::pow(xprime, n - k - 1);
  }
  chk.rhs = 2.0 * numkit::pairwise_sum(rhsTerms);
  chk.relError =
      std::abs(chk.lhs - chk.rhs) / std::max({std::abs(chk.lhs), std::abs(chk.rhs), 1e-300});
  return chk;
}

ReconstructCoords reconstruct_coordinates(const HPoint& x, int n, int k) {
  if (x.coords.size() != n + 1)
    throw invalid_argument("reconstruct_coordinates: x must have size n+1");
  if (k < 1 || k > n - 1) throw invalid_argument("reconstruct_coordinates: 1 <= k <= n-1");
  const Eigen::VectorXd xprime = x.coords.head(n - k);
  const double norm = xprime.norm();
  if (norm <= 0.0)
    throw precondition_error("reconstruct_coordinates: x' = 0 is degenerate (no prescription)");

  ReconstructCoords rc;
  rc.v = xprime / norm;
  Eigen::VectorXd etaBlock = Eigen::VectorXd::Zero(k + 2);
  etaBlock[0] = norm;
  etaBlock.tail(k + 1) = x.coords.tail(k + 1);
  rc.eta = HPoint::from_coords(std::move(etaBlock));
  rc.gamma = make_block_rotation(rc.v, k);

  Eigen::VectorXd full = Eigen::VectorXd::Zero(n + 1);
  full.tail(k + 2) = rc.eta.coords;
  if ((rc.gamma.apply(full) - x.coords).norm() > 1e-10)
    throw numerical_error("reconstruct_coordinates: gamma~_v eta failed to reproduce x");
  return rc;
}

} // namespace igt::hyper
