#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "igt/euclid/transform.hpp"

namespace igt::range {

/// Max over the grid of |phi(theta,s,x'') - phi(-theta,-s,x'')|. Grids must
/// be antipodally/symmetrically closed.
double check_evenness(const euclid::RestrictedSinogram& phi);

/// Finite-difference estimate of the weighted seminorm
/// sup (1+|s|+|x''|)^m |D^mu phi|, |mu| <= m, with theta-derivatives taken
/// on the degree-zero homogeneous extension. m <= 2; theta-differencing is
/// implemented for k = 1.
struct SeminormReport {
  int m = 0;
  double value = 0.0;
  std::vector<int> gridResolutionUsed;
};
SeminormReport estimate_seminorm(const euclid::RestrictedSinogram& phi, int m);

/// Least-squares fit of the s-moment mu_m(theta, x'') = int phi s^m ds by a
/// homogeneous degree-m polynomial in theta, independently per x''.
struct MomentPolynomial {
  int degree = 0;
  std::vector<Eigen::VectorXi> multiIndices;    // exponents, |alpha| = m
  std::vector<Eigen::VectorXd> coefficients;    // per multi-index, over x'' flat
  double residual = 0.0;                        // worst-case relative misfit
};
struct MomentOptions {
  double ridge = 1e-12;
  double condLimit = 1e8;
  double tailTol = 1e-12;
};
MomentPolynomial check_moment_condition(const euclid::RestrictedSinogram& phi, int m,
                                        const MomentOptions& opts = {});

/// Constructive inverse: psi(x',x'') = int phi(x'/|x'|, s; x'') e^{is|x'|} ds,
/// Fourier transform in x'', then inverse n-dimensional Fourier transform.
/// Numerically this is the Fourier-slice inversion with an explicit
/// (forward, inverse) discrete Fourier pair inserted along the x'' axes.
struct RangeConstructOptions {
  euclid::InvertFourierOptions fourier{};
  double evennessTol = 1e-8;
};
euclid::ScalarFieldRn range_construct_f(const euclid::RestrictedSinogram& phi,
                                        const euclid::BoxGrid& targetXp,
                                        const RangeConstructOptions& opts = {});

struct RangeTolerances {
  double evenness = 1e-8;
  double moment = 1e-6;
  double roundtrip = 1e-3;
};

struct RangeVerdict {
  struct Criterion {
    std::string name;
    int m = -1;
    double value = 0.0;
    double threshold = 0.0;
    bool pass = false;
    std::string note;
  };
  std::vector<Criterion> criteria;
  bool pass = false;
};

struct RangeVerdictOptions {
  int mMax = 4;
  RangeTolerances tol{};
  euclid::BoxGrid targetXp; // x'-target for the reconstruction roundtrip
  euclid::ForwardOptions forward{};
  euclid::InvertFourierOptions fourier{};
};

/// Aggregates evenness, seminorm finiteness (m <= 2), moment conditions
/// m = 0..mMax and the reconstruction roundtrip into a pass/fail report.
RangeVerdict range_verdict(const euclid::RestrictedSinogram& phi,
                           const RangeVerdictOptions& opts);

} // namespace igt::range
