#pragma once

#include <Eigen/Dense>
#include <span>

#include "igt/euclid/field.hpp"
#include "igt/euclid/sinogram.hpp"

namespace igt::euclid {

struct ForwardOptions {
  int planeOrder = 64; // Gauss-Legendre order per axis of the plane box
  int threads = 1;
};

/// Integral of f over the single plane tau(theta, s; x''): tensor
/// Gauss-Legendre over a box in theta-perp for compactly supported fields,
/// dyadic radial shells with a Cauchy test for the counterexample family
/// (throws divergence_error carrying the partial value when it fails).
double forward_plane_integral(const ScalarFieldRn& f, const Eigen::VectorXd& theta, double s,
                              const Eigen::VectorXd& xpp, int order = 64);

/// Restricted k-plane transform on the given grids. Values at (-theta, -s)
/// are mirror copies of the canonical orientation, so the evenness identity
/// holds bit-exactly.
RestrictedSinogram forward_restricted(const ScalarFieldRn& f, SinogramGrids grids,
                                      const ForwardOptions& opts = {});

/// Shifted dual transform (R*_t phi_{x''})(x') averaged over S^k with the
/// normalized measure; s-values off the grid interpolate cubically, points
/// beyond the s-range count as zero. Throws coverage_error when more than
/// coverageTol of the quadrature weight falls out of range.
struct DualOptions {
  double coverageTol = 0.01;
};
double dual_transform(const RestrictedSinogram& phi, int xppFlat, const Eigen::VectorXd& xp,
                      double t, const DualOptions& opts = {});

/// Inversion for k = 1 via (1/pi) int_eps^inf [R* phi - R*_t phi] / t^2 dt.
/// The quadrature runs on [eps, tMax]; beyond tMax the shifted term has left
/// the s-range, so the remaining tail contributes R* phi / tMax exactly.
/// eps is halved geometrically with a Richardson-style acceptance test.
struct InvertDualOptions {
  double tol = 1e-4;
  int maxHalvings = 24;
  int panelOrder = 16;
};
double invert_dual_formula_k1(const RestrictedSinogram& phi, const Eigen::VectorXd& xp,
                              int xppFlat, double epsilon, double tMax,
                              const InvertDualOptions& opts = {});

/// Fourier-slice inversion for k = 1: per x''-slice, the FT in s of the
/// sinogram is resampled from polar to Cartesian frequencies (bilinear,
/// zero-padded) and inverted by a 2-D Fourier sum on the target grid.
struct InvertFourierOptions {
  double freqMax = 0.0; // 0: pi / (2 * s spacing)
  int freqCount = 257;
  int cartCount = 0; // 0: freqCount
  int threads = 1;
  double tailTol = 1e-6;
};
ScalarFieldRn invert_fourier_slice(const RestrictedSinogram& phi, const BoxGrid& targetXp,
                                   const InvertFourierOptions& opts = {});

/// Cartesian frequency samples psi(y', x'') = FT_s phi(y'/|y'|, . ; x'')(|y'|)
/// per x''-slice: the shared first stage of the Fourier-slice inversion.
struct PsiCartesian {
  double freqMax = 0.0;
  int ny = 0;
  std::vector<Eigen::MatrixXcd> slices; // one ny x ny block per x'' index
};
PsiCartesian psi_cartesian(const RestrictedSinogram& phi, const InvertFourierOptions& opts = {});

/// Second stage: inverse 2-D Fourier sum of each slice onto the target x'
/// grid; assembles the sampled field over (target x') x (sinogram x'').
ScalarFieldRn invert_psi_cartesian(const PsiCartesian& psi, const RestrictedSinogram& phi,
                                   const BoxGrid& targetXp, int threads = 1);

/// Truncated transform values T(Lambda) of the counterexample f0 at a fixed
/// plane, for an increasing radius schedule. Diagnostic only.
struct DivergenceScan {
  Eigen::VectorXd lambdas;
  Eigen::VectorXd values;
  bool strictly_increasing = false;
};
DivergenceScan divergence_scan_f0(int n, int k, double p, double delta,
                                  std::span<const double> lambdaSchedule, const PlaneParam& probe,
                                  int panelOrder = 32);

} // namespace igt::euclid
