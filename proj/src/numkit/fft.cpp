#include "igt/numkit/fft.hpp"

#include <cmath>

#include "igt/errors.hpp"
#include "igt/numkit/reduce.hpp"

namespace igt::numkit {

Eigen::VectorXcd dft_1d(std::span<const std::complex<double>> samples, int sign) {
  const std::size_t n = samples.size();
  if (n < 2 || (n & (n - 1)) != 0)
    throw invalid_argument("dft_1d: length must be a power of two, >= 2");
  if (sign != 1 && sign != -1) throw invalid_argument("dft_1d: sign must be +1 or -1");

  Eigen::VectorXcd a(n);
  // Bit-reversal permutation.
  std::size_t bits = 0;
  while ((std::size_t{1} << bits) < n) ++bits;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = 0;
    for (std::size_t b = 0; b < bits; ++b) r |= ((i >> b) & 1u) << (bits - 1 - b);
    a[static_cast<Eigen::Index>(r)] = samples[i];
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = sign * 2.0 * M_PI / static_cast<double>(len);
    const std::complex<double> wlen(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t j = 0; j < len / 2; ++j) {
        const auto u = a[static_cast<Eigen::Index>(i + j)];
        const auto v = a[static_cast<Eigen::Index>(i + j + len / 2)] * w;
        a[static_cast<Eigen::Index>(i + j)] = u + v;
        a[static_cast<Eigen::Index>(i + j + len / 2)] = u - v;
        w *= wlen;
      }
    }
  }
  return a;
}

Eigen::VectorXcd dft_1d(const Eigen::VectorXcd& samples, int sign) {
  return dft_1d(std::span<const std::complex<double>>(samples.data(),
                                                      static_cast<std::size_t>(samples.size())),
                sign);
}

FtResult continuous_ft_1d(const Grid1D& grid, std::span<const double> samples,
                          std::span<const double> frequencies, double tail_tol) {
  const int n = grid.size();
  if (static_cast<int>(samples.size()) != n)
    throw invalid_argument("continuous_ft_1d: sample count does not match grid");

  double peak = 0.0;
  for (double v : samples) peak = std::max(peak, std::abs(v));
  const bool truncated =
      peak > 0.0 && (std::abs(samples.front()) > tail_tol * peak ||
                     std::abs(samples.back()) > tail_tol * peak);

  FtResult out;
  out.truncated = truncated;
  out.values.resize(static_cast<Eigen::Index>(frequencies.size()));
  Eigen::VectorXcd terms(n);
  for (std::size_t q = 0; q < frequencies.size(); ++q) {
    const double y = frequencies[q];
    for (int i = 0; i < n; ++i) {
      const double ph = grid.nodes[i] * y;
      terms[i] = grid.weights[i] * samples[i] * std::complex<double>(std::cos(ph), std::sin(ph));
    }
    out.values[static_cast<Eigen::Index>(q)] =
        pairwise_sum(std::span<const std::complex<double>>(terms.data(), static_cast<std::size_t>(n)));
  }
  return out;
}

} // namespace igt::numkit
