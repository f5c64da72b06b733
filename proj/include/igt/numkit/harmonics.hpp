#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "igt/numkit/sphere.hpp"

namespace igt::numkit {

/// Legendre polynomial P_m(x) by the three-term recurrence.
double legendre_p(int m, double x);

/// P_m(0): zero for odd m, (-1)^{m/2} (m-1)!!/m!! for even m.
double legendre_p_at_zero(int m);

/// Real orthonormal spherical-harmonic coefficients on S^2, one block per
/// degree m with 2m+1 entries ordered [m0, cos(1)..cos(m), sin(1)..sin(m)].
/// The basis is orthonormal with respect to the unnormalized surface
/// measure, so Parseval reads sum |coeff|^2 = int |f|^2 dtheta.
struct HarmonicSpectrum {
  int sphereDim = 2;
  int maxDegree = 0;
  std::vector<Eigen::VectorXd> coeffs;

  double total_energy() const;
  double odd_degree_energy() const;

  /// Point evaluation of the band-limited synthesis.
  double synthesize(const Eigen::Vector3d& p) const;
  Eigen::VectorXd synthesize(const SphereQuadrature& quad) const;
};

/// Row of all basis values Y_{m,j}(p), m <= maxDegree, in spectrum order.
Eigen::VectorXd harmonic_basis_row(int maxDegree, const Eigen::Vector3d& p);

/// Quadrature projection coeffs[m][j] = int f conj(Y_{m,j}) dtheta. Requires
/// quad.order >= 2*maxDegree (aliasing guard) and quad.dim == 2.
HarmonicSpectrum harmonic_analyze(const SphereQuadrature& quad, std::span<const double> samples,
                                  int maxDegree);

} // namespace igt::numkit
