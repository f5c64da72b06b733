// Test-only oracles: closed forms and brute-force integrators kept
// independent of the library's quadrature machinery.
#pragma once

#include <cmath>
#include <functional>
#include <vector>

namespace oracles {

// Adaptive Simpson integration (recursive), independent of the library's
// Gauss-Legendre path.
inline double simpson_step(const std::function<double(double)>& f, double a, double b, double fa,
                           double fm, double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-12, int depth = 40) {
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_step(f, a, b, fa, fm, fb, whole, tol, depth);
}

// Closed-form sphere moment: integral over S^d (unnormalized measure) of
// prod_i theta_i^{e_i}; zero when any exponent is odd, otherwise
// 2 prod Gamma((e_i+1)/2) / Gamma(sum (e_i+1)/2).
inline double sphere_monomial_integral(const std::vector<int>& exponents) {
  double logNum = 0.0, half = 0.0;
  for (int e : exponents) {
    if (e % 2 == 1) return 0.0;
    logNum += std::lgamma(0.5 * (e + 1));
    half += 0.5 * (e + 1);
  }
  return 2.0 * std::exp(logNum - std::lgamma(half));
}

inline double sphere_area(int d) {
  return 2.0 * std::pow(M_PI, 0.5 * (d + 1)) / std::tgamma(0.5 * (d + 1));
}

// Gaussian slice integral: for f(x) = exp(-|x - c|^2) on R^n with k = 1,
// the restricted transform is sqrt(pi) exp(-(s - theta.c')^2) exp(-|x''-c''|^2).
inline double gaussian_sinogram(double s, double thetaDotCp, double xppDistSq) {
  return std::sqrt(M_PI) * std::exp(-std::pow(s - thetaDotCp, 2)) * std::exp(-xppDistSq);
}

// Fourier transform of exp(-s^2) with kernel e^{isy}: sqrt(pi) e^{-y^2/4}.
inline double gaussian_ft(double y) { return std::sqrt(M_PI) * std::exp(-0.25 * y * y); }

} // namespace oracles
