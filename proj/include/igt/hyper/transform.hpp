#pragma once

#include <Eigen/Dense>
#include <span>

#include "igt/hyper/field.hpp"
#include "igt/hyper/lorentz.hpp"
#include "igt/rotation.hpp"

namespace igt::hyper {

struct HQuadrature {
  Eigen::MatrixXd nodes;   // N x (dim+1), points of H^dim (embedded)
  Eigen::VectorXd weights; // Riemannian measure weights

  int size() const { return static_cast<int>(nodes.rows()); }
  double integrate(const HField& f) const;
};

struct HPolarOptions {
  int rOrder = 24;
  int rPanels = 8;
  int sphereOrder = 32;
};

/// Standard polar quadrature on H^k inside R^{k+1}:
/// u = omega sinh(rho) + e_{k+1} cosh(rho), d(u) = sinh^{k-1}(rho) drho domega.
HQuadrature hk_polar_quadrature(int k, double rMax, const HPolarOptions& opts = {});

/// Quadrature for the split H^n = (S^{n-k-1}, H^k, r) with
/// x = v sinh r + u cosh r and dnu(r) = sinh^{n-k-1} r cosh^k r dr.
/// k = 0 reduces to the plain polar decomposition; k = n-1 is the
/// complementary one-dimensional split.
HQuadrature hpolar_quadrature(int n, int k, double rMax, const HPolarOptions& opts = {});

struct HyperbolicComplexElement {
  Eigen::VectorXd v;     // unit vector in R^{n-k}
  OneSheetPoint w;       // in R^{n+1}, supported on Rv + R^{k+1}

  void validate(int n, int k) const;
};

struct FlaggedValueH {
  double value = 0.0;
  bool diverged = false;
};

struct HRadonOptions {
  double rMax = 12.0;
  int rOrder = 24;
  int rPanels = 8;
  int sphereOrder = 32;
  double tailTol = 1e-12;
};

/// Restricted hyperbolic Radon transform: integral of f over the geodesic
/// submanifold {x in H^{k+1}_v : [x, w] = 0}, realized by conjugating with
/// the block rotation and pulling the standard H^k quadrature through a
/// Lorentz frame of the slice direction. The divergence flag reports a
/// failed tail check at rMax.
FlaggedValueH hradon_forward_restricted(const HField& f, int n, int k,
                                        const HyperbolicComplexElement& element,
                                        const HRadonOptions& opts = {});

struct HIdentityCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double relError = 0.0;
  Eigen::VectorXd lhsPerSigma; // duality only
};

struct HDualityOptions {
  double rhoMax = 10.0;
  double rMax = 12.0;
  int rhoOrder = 24;
  int rhoPanels = 10;
  HPolarOptions polar{};
  HRadonOptions radon{};
};

/// Codimension-one duality: for each sigma,
/// int (Hf)(sigma cosh rho + e_{n+1} sinh rho) drho / cosh rho
///   = int_{H^n} f(x) dx / x_{n+1}.
HIdentityCheck duality_identity_h(const HField& f, int n,
                                  std::span<const Eigen::VectorXd> sigmas,
                                  const HDualityOptions& opts = {});

struct SliceIdentityOptions {
  double rMax = 12.0;
  int vOrder = 32;
  HPolarOptions polar{};
};

/// Lemma-style slice decomposition:
/// int_{S^{n-k-1}} dv int_{H^{k+1}} f(gamma~_v eta) deta
///   = 2 int_{H^n} f(x) |x'|^{-(n-k-1)} dx.
HIdentityCheck slice_identity_check(const HField& f, int n, int k,
                                    const SliceIdentityOptions& opts = {});

/// Reconstruction coordinates v = x'/|x'|, eta = (0,..,0,|x'|,x'')^T with
/// gamma~_v eta = x; the plug-in seam for any external slice inverter.
struct ReconstructCoords {
  Eigen::VectorXd v;
  HPoint eta; // point of H^{k+1} in block coordinates (size k+2)
  BlockRotation gamma;
};
ReconstructCoords reconstruct_coordinates(const HPoint& x, int n, int k);

} // namespace igt::hyper
