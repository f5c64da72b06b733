#include "igt/numkit/harmonics.hpp"

#include <cmath>

#include "igt/errors.hpp"
#include "igt/numkit/reduce.hpp"

namespace igt::numkit {

double legendre_p(int m, double x) {
  if (m < 0) throw invalid_argument("legendre_p: m >= 0 required");
  if (m == 0) return 1.0;
  double p0 = 1.0, p1 = x;
  for (int j = 2; j <= m; ++j) {
    const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

double legendre_p_at_zero(int m) {
  if (m < 0) throw invalid_argument("legendre_p_at_zero: m >= 0 required");
  if (m % 2 == 1) return 0.0;
  double v = 1.0;
  for (int j = 2; j <= m; j += 2) v *= -(j - 1.0) / j;
  return v;
}

namespace {

// Fully normalized associated Legendre values Pbar_m^j(z) for all
// m <= maxDegree, j <= m (no Condon-Shortley phase); Pbar includes the
// sqrt((2m+1)/(4pi) (m-j)!/(m+j)!) factor so that Y_{m,0} = Pbar_m^0 and
// Y_{m,j} = sqrt(2) Pbar_m^j {cos,sin}(j lambda) are orthonormal in dtheta.
void normalized_assoc_legendre(int maxDegree, double z, Eigen::MatrixXd& P) {
  const int M = maxDegree;
  P.setZero(M + 1, M + 1);
  const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
  P(0, 0) = std::sqrt(1.0 / (4.0 * M_PI));
  if (M == 0) return;
  for (int m = 1; m <= M; ++m)
    P(m, m) = std::sqrt((2.0 * m + 1.0) / (2.0 * m)) * s * P(m - 1, m - 1);
  for (int m = 0; m < M; ++m) P(m + 1, m) = std::sqrt(2.0 * m + 3.0) * z * P(m, m);
  for (int j = 0; j <= M; ++j) {
    for (int m = j + 2; m <= M; ++m) {
      const double a =
          std::sqrt((2.0 * m + 1.0) * (2.0 * m - 1.0) / (double(m - j) * double(m + j)));
      const double b = std::sqrt((2.0 * m + 1.0) * (m - 1.0 - j) * (m - 1.0 + j) /
                                 ((2.0 * m - 3.0) * double(m - j) * double(m + j)));
      P(m, j) = a * z * P(m - 1, j) - b * P(m - 2, j);
    }
  }
}

} // namespace

Eigen::VectorXd harmonic_basis_row(int maxDegree, const Eigen::Vector3d& p) {
  const int M = maxDegree;
  Eigen::MatrixXd P;
  normalized_assoc_legendre(M, p.z(), P);
  const double r = std::hypot(p.x(), p.y());
  Eigen::VectorXd c(M + 1), s(M + 1);
  c[0] = 1.0;
  s[0] = 0.0;
  const double c1 = r > 0.0 ? p.x() / r : 1.0;
  const double s1 = r > 0.0 ? p.y() / r : 0.0;
  for (int j = 1; j <= M; ++j) {
    c[j] = c[j - 1] * c1 - s[j - 1] * s1;
    s[j] = s[j - 1] * c1 + c[j - 1] * s1;
  }
  Eigen::VectorXd row((M + 1) * (M + 1));
  const double sqrt2 = std::sqrt(2.0);
  int at = 0;
  for (int m = 0; m <= M; ++m) {
    row[at++] = P(m, 0);
    for (int j = 1; j <= m; ++j) row[at++] = sqrt2 * P(m, j) * c[j];
    for (int j = 1; j <= m; ++j) row[at++] = sqrt2 * P(m, j) * s[j];
  }
  return row;
}

double HarmonicSpectrum::total_energy() const {
  double e = 0.0;
  for (const auto& block : coeffs) e += block.squaredNorm();
  return e;
}

double HarmonicSpectrum::odd_degree_energy() const {
  double e = 0.0;
  for (int m = 1; m <= maxDegree; m += 2) e += coeffs[m].squaredNorm();
  return e;
}

double HarmonicSpectrum::synthesize(const Eigen::Vector3d& p) const {
  const Eigen::VectorXd row = harmonic_basis_row(maxDegree, p);
  double v = 0.0;
  int at = 0;
  for (int m = 0; m <= maxDegree; ++m) {
    v += coeffs[m].dot(row.segment(at, 2 * m + 1));
    at += 2 * m + 1;
  }
  return v;
}

Eigen::VectorXd HarmonicSpectrum::synthesize(const SphereQuadrature& quad) const {
  Eigen::VectorXd out(quad.size());
  for (int i = 0; i < quad.size(); ++i)
    out[i] = synthesize(Eigen::Vector3d(quad.points.row(i).transpose()));
  return out;
}

HarmonicSpectrum harmonic_analyze(const SphereQuadrature& quad, std::span<const double> samples,
                                  int maxDegree) {
  if (quad.dim != 2)
    throw unsupported_dimension("harmonic_analyze: implemented for S^2 (quad.dim == 2)");
  if (static_cast<int>(samples.size()) != quad.size())
    throw invalid_argument("harmonic_analyze: sample count does not match quadrature");
  if (maxDegree < 0) throw invalid_argument("harmonic_analyze: maxDegree >= 0 required");
  if (quad.order < 2 * maxDegree)
    throw resolution_error("harmonic_analyze: quadrature order " + std::to_string(quad.order) +
                           " < 2*maxDegree = " + std::to_string(2 * maxDegree) +
                           " risks aliasing");

  const int nb = (maxDegree + 1) * (maxDegree + 1);
  const int N = quad.size();
  const double toUnnormalized = quad.normalized ? sphere_surface_area(2) : 1.0;
  Eigen::MatrixXd terms(N, nb);
  for (int i = 0; i < N; ++i) {
    const Eigen::VectorXd row = harmonic_basis_row(maxDegree, Eigen::Vector3d(quad.points.row(i).transpose()));
    terms.row(i) = (toUnnormalized * quad.weights[i] * samples[i]) * row.transpose();
  }
  HarmonicSpectrum spec;
  spec.sphereDim = 2;
  spec.maxDegree = maxDegree;
  spec.coeffs.resize(maxDegree + 1);
  int at = 0;
  for (int m = 0; m <= maxDegree; ++m) {
    spec.coeffs[m].resize(2 * m + 1);
    for (int j = 0; j < 2 * m + 1; ++j, ++at) {
      const Eigen::VectorXd col = terms.col(at);
      spec.coeffs[m][j] =
          pairwise_sum(std::span<const double>(col.data(), static_cast<std::size_t>(N)));
    }
  }
  return spec;
}

} // namespace igt::numkit
