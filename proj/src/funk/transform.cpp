#include "igt/funk/transform.hpp"

#include <cmath>
#include <vector>

#include "igt/errors.hpp"
#include "igt/numkit/basis.hpp"
#include "igt/numkit/grid.hpp"
#include "igt/numkit/reduce.hpp"

namespace igt::funk {

namespace {

// S^{d} quadrature including the two-point S^0 case used when k = n-1.
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

Eigen::VectorXd embed_block(const Eigen::VectorXd& block, int n) {
  Eigen::VectorXd full = Eigen::VectorXd::Zero(n + 1);
  full.tail(block.size()) = block;
  return full;
}

// Orthonormal columns spanning R^{k+2}_v = Rv + span(e_{n-k+1}..e_{n+1}).
Eigen::MatrixXd slice_span(const Eigen::VectorXd& v, int n, int k) {
  Eigen::MatrixXd span = Eigen::MatrixXd::Zero(n + 1, k + 2);
  span.col(0).head(v.size()) = v;
  for (int j = 0; j < k + 1; ++j) span(n - k + j, j + 1) = 1.0;
  return span;
}

double mean_over_subsphere(const SphereField& f, const Eigen::MatrixXd& basis, int k, int order) {
  const auto quad = sphere_quad_any(k, order, true);
  std::vector<double> terms(static_cast<std::size_t>(quad.size()));
  Eigen::VectorXd point(basis.rows());
  for (int i = 0; i < quad.size(); ++i) {
    point.noalias() = basis * quad.point(i);
    terms[static_cast<std::size_t>(i)] = quad.weights[i] * f.eval(point);
  }
  return numkit::pairwise_sum(terms);
}

} // namespace

void SphericalComplexElement::validate(int n, int k) const {
  if (v.size() != n - k || w.size() != n + 1)
    throw invalid_argument("SphericalComplexElement: v must have size n-k, w size n+1");
  if (std::abs(v.norm() - 1.0) > 1e-12 || std::abs(w.norm() - 1.0) > 1e-12)
    throw invalid_argument("SphericalComplexElement: |v| and |w| must be 1 within 1e-12");
  Eigen::VectorXd head = w.head(n - k);
  head -= head.dot(v) * v;
  if (head.norm() > 1e-12)
    throw invalid_argument("SphericalComplexElement: w must lie in Rv + R^{k+1}");
}

FlaggedValue funk_forward_restricted(const SphereField& f, int k,
                                     const SphericalComplexElement& element, int order) {
  const int n = f.n();
  element.validate(n, k);
  if (f.kind() == SphereField::Kind::Sampled)
    throw invalid_argument("funk_forward_restricted: sampled fields cannot be evaluated off-node");

  const Eigen::MatrixXd span = slice_span(element.v, n, k);
  const Eigen::MatrixXd basis = numkit::perp_basis_in_span(span, element.w);

  FlaggedValue out;
  out.value = mean_over_subsphere(f, basis, k, order);
  if (f.kind() == SphereField::Kind::CounterexampleFtilde) {
    const double refined = mean_over_subsphere(f, basis, k, 2 * order);
    if (std::abs(refined - out.value) > 1e-3 * std::max(1.0, std::abs(refined))) {
      out.diverged = true;
      out.value = refined;
    }
  }
  return out;
}

FlaggedValue funk_forward_via_rotation(const SphereField& f, int k,
                                       const SphericalComplexElement& element, int order) {
  const int n = f.n();
  element.validate(n, k);
  const BlockRotation rot = make_block_rotation(element.v, k);
  const Eigen::VectorXd zetaFull = rot.apply_inverse(element.w);
  if (n - k - 1 > 0 && zetaFull.head(n - k - 1).norm() > 1e-10)
    throw numerical_error("funk_forward_via_rotation: conjugated direction left the slice space");
  const Eigen::VectorXd zeta = zetaFull.tail(k + 2);

  const Eigen::MatrixXd basisBlock =
      numkit::perp_basis_in_span(Eigen::MatrixXd::Identity(k + 2, k + 2), zeta);
  const auto quad = sphere_quad_any(k, order, true);
  std::vector<double> terms(static_cast<std::size_t>(quad.size()));
  for (int i = 0; i < quad.size(); ++i) {
    const Eigen::VectorXd etaBlock = basisBlock * quad.point(i);
    terms[static_cast<std::size_t>(i)] = quad.weights[i] * f.eval(rot.apply(embed_block(etaBlock, n)));
  }
  return {numkit::pairwise_sum(terms), false};
}

IdentityCheck duality_identity_check(const SphereField& f, int n, int k,
                                     const FunkDualityOptions& opts) {
  if (k < 1 || k > n - 1) throw invalid_argument("duality_identity_check: 1 <= k <= n-1");

  // Weighted side via bi-spherical coordinates (the cos^{n-k-1} Jacobian
  // cancels |theta'|^{-(n-k-1)} exactly). Divergence of the weighted
  // integral of |f| is detected by doubling the polar order.
  const auto vQuadU = sphere_quad_any(n - k - 1, opts.vOrder, false);
  const auto wQuadU = sphere_quad_any(k, opts.wOrder, false);
  const double sigmaN = numkit::sphere_surface_area(n);

  auto weighted_integral = [&](int psiOrder, bool absValue) {
    Eigen::VectorXd gx, gw;
    numkit::gauss_legendre_rule(psiOrder, gx, gw);
    std::vector<double> psiTerms(static_cast<std::size_t>(psiOrder));
    std::vector<double> inner(static_cast<std::size_t>(vQuadU.size()) * wQuadU.size());
    Eigen::VectorXd theta(n + 1);
    for (int q = 0; q < psiOrder; ++q) {
      const double psi = 0.25 * M_PI * (gx[q] + 1.0);
      const double cp = std::cos(psi), sp = std::sin(psi);
      std::size_t at = 0;
      for (int iv = 0; iv < vQuadU.size(); ++iv)
        for (int iw = 0; iw < wQuadU.size(); ++iw, ++at) {
          theta.setZero();
          theta.head(n - k) = cp * vQuadU.point(iv);
          theta.tail(k + 1) = sp * wQuadU.point(iw);
          const double fv = f.eval(theta);
          inner[at] = vQuadU.weights[iv] * wQuadU.weights[iw] * (absValue ? std::abs(fv) : fv);
        }
      psiTerms[static_cast<std::size_t>(q)] =
          0.25 * M_PI * gw[q] * std::pow(sp, k) * numkit::pairwise_sum(inner);
    }
    return numkit::pairwise_sum(psiTerms) / sigmaN;
  };

  const double absCoarse = weighted_integral(opts.psiOrder, true);
  const double absFine = weighted_integral(2 * opts.psiOrder, true);
  if (std::abs(absFine - absCoarse) > 1e-3 * std::max(1.0, std::abs(absFine)))
    throw precondition_error(
        "duality_identity_check: weighted integral of |f| fails to converge (Eq. precondition)");

  const double weighted = weighted_integral(2 * opts.psiOrder, false);
  const double constant =
      2.0 * sigmaN / (numkit::sphere_surface_area(k + 1) * numkit::sphere_surface_area(n - k - 1));

  IdentityCheck chk;
  chk.rhs = constant * weighted;

  // Complex side: nested normalized quadratures over v and w.
  const auto vQuad = sphere_quad_any(n - k - 1, opts.vOrder, true);
  const auto wQuad = sphere_quad_any(k + 1, opts.wOrder, true);
  std::vector<double> terms(static_cast<std::size_t>(vQuad.size()) * wQuad.size());
  std::size_t at = 0;
  for (int iv = 0; iv < vQuad.size(); ++iv) {
    const Eigen::VectorXd v = vQuad.point(iv);
    const BlockRotation rot = make_block_rotation(v, k);
    for (int iw = 0; iw < wQuad.size(); ++iw, ++at) {
      SphericalComplexElement el;
      el.v = v;
      el.w = rot.apply(embed_block(wQuad.point(iw), n));
      terms[at] = vQuad.weights[iv] * wQuad.weights[iw] *
                  funk_forward_restricted(f, k, el, opts.circleOrder).value;
    }
  }
  chk.lhs = numkit::pairwise_sum(terms);
  chk.relError = std::abs(chk.lhs - chk.rhs) /
                 std::max({std::abs(chk.lhs), std::abs(chk.rhs), 1e-300});
  return chk;
}

SliceInversion funk_invert_slice(const numkit::SphereQuadrature& quad,
                                 std::span<const double> phiSlice, int maxDegree, double oddTol) {
  numkit::HarmonicSpectrum spec = harmonic_analyze(quad, phiSlice, maxDegree);
  const double total = spec.total_energy();
  const double odd = spec.odd_degree_energy();
  if (total > 0.0 && std::sqrt(odd / total) > oddTol)
    throw numerical_error("funk_invert_slice: odd harmonic content " +
                          std::to_string(std::sqrt(odd / total)) +
                          " exceeds tolerance; not a Funk image");
  for (int m = 0; m <= maxDegree; ++m) {
    if (m % 2 == 1) {
      spec.coeffs[m].setZero();
      continue;
    }
    const double mu = numkit::legendre_p_at_zero(m);
    if (std::abs(mu) < 1e-300)
      throw numerical_error("funk_invert_slice: multiplier underflow at degree " +
                            std::to_string(m));
    spec.coeffs[m] /= mu;
  }
  SliceInversion inv{spec, SphereField::sampled(2, quad, spec.synthesize(quad))};
  return inv;
}

namespace {

double reconstruct_core(const ComplexImage& phi, int n, int k, const Eigen::VectorXd& theta,
                        const ReconstructOptions& opts) {
  const Eigen::VectorXd thetaPrime = theta.head(n - k);
  const double tp = thetaPrime.norm();
  const Eigen::VectorXd v = thetaPrime / tp;
  const BlockRotation rot = make_block_rotation(v, k);

  const auto quad = numkit::make_sphere_quadrature(k + 1, opts.quadOrder, true);
  Eigen::VectorXd slice(quad.size());
  for (int i = 0; i < quad.size(); ++i)
    slice[i] = phi(v, rot.apply(embed_block(quad.point(i), n)));

  const SliceInversion inv = funk_invert_slice(
      quad, std::span<const double>(slice.data(), static_cast<std::size_t>(slice.size())),
      opts.maxDegree);

  Eigen::Vector3d eta;
  eta[0] = tp;
  eta.tail(k + 1) = theta.tail(k + 1);
  return inv.spectrum.synthesize(eta);
}

} // namespace

double reconstruct_point(const ComplexImage& phi, int n, int k, const Eigen::VectorXd& theta,
                         const ReconstructOptions& opts) {
  if (k != 1)
    throw unsupported_dimension("reconstruct_point: slice inversion implemented for k+1 = 2");
  if (theta.size() != n + 1) throw invalid_argument("reconstruct_point: theta must have size n+1");
  if (std::abs(theta.norm() - 1.0) > 1e-10)
    throw invalid_argument("reconstruct_point: |theta| must be 1");

  const double tp = theta.head(n - k).norm();
  if (tp > opts.thetaPrimeMin) return reconstruct_core(phi, n, k, theta, opts);

  if (!opts.continuityExtension)
    throw precondition_error("reconstruct_point: |theta'| below threshold and continuity "
                             "extension disabled");

  // Continuity extension: average over 8 nearby points on the cap
  // |theta'| = capRadius around the theta'' direction.
  const int nv = n - k;
  const double eps = opts.capRadius;
  Eigen::VectorXd thetaSecond = theta.tail(k + 1);
  const double tsNorm = thetaSecond.norm();
  if (tsNorm < 1e-12)
    throw precondition_error("reconstruct_point: degenerate point");
  thetaSecond /= tsNorm;

  std::vector<double> vals;
  vals.reserve(8);
  for (int i = 0; i < 8; ++i) {
    Eigen::VectorXd u = Eigen::VectorXd::Zero(nv);
    if (nv == 2) {
      const double a = 2.0 * M_PI * i / 8.0;
      u << std::cos(a), std::sin(a);
    } else if (nv == 3) {
      const double s3 = 1.0 / std::sqrt(3.0);
      u << (i & 1 ? s3 : -s3), (i & 2 ? s3 : -s3), (i & 4 ? s3 : -s3);
    } else {
      throw unsupported_dimension("reconstruct_point: continuity extension supports n-k in {2,3}");
    }
    Eigen::VectorXd probe = Eigen::VectorXd::Zero(n + 1);
    probe.head(nv) = eps * u;
    probe.tail(k + 1) = std::sqrt(1.0 - eps * eps) * thetaSecond;
    vals.push_back(reconstruct_core(phi, n, k, probe, opts));
  }
  return numkit::pairwise_sum(vals) / 8.0;
}

FtildeScanReport counterexample_scan_ftilde(int n, int k, double p,
                                            std::span<const double> cutoffs, double h) {
  if (k < 1 || k >= n - 1) throw invalid_argument("counterexample_scan_ftilde: 1 <= k < n-1");
  if (!(p >= 1.0)) throw invalid_argument("counterexample_scan_ftilde: p >= 1 required");
  if (!(h > 0.0 && h <= 1.0)) throw invalid_argument("counterexample_scan_ftilde: 0 < h <= 1");
  for (std::size_t j = 0; j < cutoffs.size(); ++j) {
    if (!(cutoffs[j] > 0.0 && cutoffs[j] < 0.5))
      throw invalid_argument("counterexample_scan_ftilde: cutoffs must lie in (0, 1/2)");
    if (j > 0 && !(cutoffs[j] < cutoffs[j - 1]))
      throw invalid_argument("counterexample_scan_ftilde: cutoffs must decrease strictly");
  }

  FtildeScanReport rep;
  const auto m = static_cast<Eigen::Index>(cutoffs.size());
  rep.cutoffs = Eigen::Map<const Eigen::VectorXd>(cutoffs.data(), m);
  rep.lpTruncations.resize(m);
  rep.funkTruncations.resize(m);
  rep.funkIncrements.resize(m);

  // (a) || ftilde ||_p^p = sigma_k sigma_{n-k-1} *
  //     int_eps^1 (1 - log s)^{-p} (1 - s^2)^{(k-1)/2} s^{n-k-1-p} ds,
  // integrated in tau = -log s where the integrand flattens out.
  const double front = numkit::sphere_surface_area(k) * numkit::sphere_surface_area(n - k - 1);
  auto lpIntegrand = [&](double tau) {
    return std::pow(1.0 + tau, -p) * std::pow(1.0 - std::exp(-2.0 * tau), 0.5 * (k - 1)) *
           std::exp(-tau * (n - k - p));
  };
  auto segment = [&](auto&& fn, double tauLo, double tauHi) {
    const int panels = std::max(1, static_cast<int>(std::ceil(tauHi - tauLo)));
    return numkit::integrate_gl(fn, tauLo, tauHi, 24, panels);
  };

  double lpAcc = segment(lpIntegrand, 0.0, -std::log(cutoffs[0]));
  rep.lpTruncations[0] = front * lpAcc;
  for (Eigen::Index j = 1; j < m; ++j) {
    const double inc = segment(lpIntegrand, -std::log(cutoffs[j - 1]), -std::log(cutoffs[j]));
    lpAcc += inc;
    rep.lpTruncations[j] = front * lpAcc;
    rep.lpFinalIncrement = front * inc;
  }

  // (b) model Funk integral int_eps^{1/2} dt / (t (1 - log(t h))), again in
  // tau = -log t.
  auto funkIntegrand = [&](double tau) { return 1.0 / (1.0 - std::log(h) + tau); };
  double fAcc = segment(funkIntegrand, std::log(2.0), -std::log(cutoffs[0]));
  rep.funkTruncations[0] = fAcc;
  rep.funkIncrements[0] = fAcc;
  for (Eigen::Index j = 1; j < m; ++j) {
    const double inc = segment(funkIntegrand, -std::log(cutoffs[j - 1]), -std::log(cutoffs[j]));
    fAcc += inc;
    rep.funkTruncations[j] = fAcc;
    rep.funkIncrements[j] = inc;
  }
  rep.funkStrictlyIncreasing = true;
  for (Eigen::Index j = 1; j < m; ++j)
    if (!(rep.funkTruncations[j] > rep.funkTruncations[j - 1]))
      rep.funkStrictlyIncreasing = false;
  return rep;
}

} // namespace igt::funk
