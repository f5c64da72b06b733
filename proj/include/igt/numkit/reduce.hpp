#pragma once

#include <complex>
#include <span>

namespace igt::numkit {

namespace detail {

template <class T>
T pairwise_sum_impl(const T* v, std::size_t n) {
  if (n <= 8) {
    T s{};
    for (std::size_t i = 0; i < n; ++i) s += v[i];
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum_impl(v, half) + pairwise_sum_impl(v + half, n - half);
}

} // namespace detail

/// Deterministic reduction: fixed pairwise tree over the element order.
/// Bit-identical across runs and thread counts for identical inputs.
inline double pairwise_sum(std::span<const double> v) {
  return detail::pairwise_sum_impl(v.data(), v.size());
}

inline std::complex<double> pairwise_sum(std::span<const std::complex<double>> v) {
  return detail::pairwise_sum_impl(v.data(), v.size());
}

} // namespace igt::numkit
