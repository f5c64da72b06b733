#pragma once

#include <Eigen/Dense>
#include <functional>
#include <span>

#include "igt/funk/field.hpp"
#include "igt/numkit/harmonics.hpp"
#include "igt/rotation.hpp"

namespace igt::funk {

/// One member of the admissible complex on S^n: v on S^{n-k-1} and w a unit
/// vector of the slice sphere S^{k+1}_v = S^n intersect (Rv + R^{k+1}).
/// Consumers are invariant under independent sign flips of v and w.
struct SphericalComplexElement {
  Eigen::VectorXd v; // size n-k
  Eigen::VectorXd w; // size n+1, supported on Rv + span(e_{n-k+1}..e_{n+1})

  void validate(int n, int k) const;
};

struct FlaggedValue {
  double value = 0.0;
  bool diverged = false;
};

/// Restricted Funk transform: mean of f over the great k-subsphere
/// {theta in S^{k+1}_v : theta . w = 0} with the normalized measure,
/// realized intrinsically on an orthonormal basis of w-perp inside the
/// slice space. The divergence flag is set when doubling the quadrature
/// order moves the value by more than one part in 1e3.
FlaggedValue funk_forward_restricted(const SphereField& f, int k,
                                     const SphericalComplexElement& element, int order = 64);

/// Same value through the rotation block: (F~ f)(v, gamma~_v zeta) = (F f_v)(zeta).
FlaggedValue funk_forward_via_rotation(const SphereField& f, int k,
                                       const SphericalComplexElement& element, int order = 64);

struct IdentityCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double relError = 0.0;
};

struct FunkDualityOptions {
  int vOrder = 32;
  int wOrder = 32;
  int circleOrder = 64;
  int psiOrder = 64; // bi-spherical polar factor on the weighted side
};

/// Integral of the restricted transform over the complex against the
/// weighted integral of f: both sides by independent quadratures, with the
/// constant 2 sigma_n / (sigma_{k+1} sigma_{n-k-1}).
IdentityCheck duality_identity_check(const SphereField& f, int n, int k,
                                     const FunkDualityOptions& opts = {});

/// Harmonic inversion of the Funk transform on a slice sphere S^2: divide
/// even-degree coefficients by P_m(0), drop odd degrees.
struct SliceInversion {
  numkit::HarmonicSpectrum spectrum;
  SphereField field; // sampled on the input quadrature
};
SliceInversion funk_invert_slice(const numkit::SphereQuadrature& quad,
                                 std::span<const double> phiSlice, int maxDegree,
                                 double oddTol = 1e-8);

/// Pointwise reconstruction from an image of the restricted transform,
/// available as a callable on elements. For |theta'| below the threshold the
/// value is the average of reconstructions at 8 nearby points with
/// |theta'| = capRadius (continuity extension).
struct ReconstructOptions {
  int maxDegree = 16;
  int quadOrder = 64;
  double thetaPrimeMin = 1e-3;
  bool continuityExtension = true;
  double capRadius = 1e-2;
};
using ComplexImage =
    std::function<double(const Eigen::VectorXd& v, const Eigen::VectorXd& w)>;
double reconstruct_point(const ComplexImage& phi, int n, int k, const Eigen::VectorXd& theta,
                         const ReconstructOptions& opts = {});

/// Diagnostic scan for the counterexample ftilde: (a) truncated quadratures
/// of the 1-D integral behind ||ftilde||_p^p, (b) truncations of the model
/// Funk integral int_eps^{1/2} dt / (t (1 - log(t h))).
struct FtildeScanReport {
  Eigen::VectorXd cutoffs;
  Eigen::VectorXd lpTruncations;
  double lpFinalIncrement = 0.0;
  Eigen::VectorXd funkTruncations;
  Eigen::VectorXd funkIncrements;
  bool funkStrictlyIncreasing = false;
};
FtildeScanReport counterexample_scan_ftilde(int n, int k, double p,
                                            std::span<const double> cutoffs, double h = 1.0);

} // namespace igt::funk
