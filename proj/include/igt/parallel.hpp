#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace igt {

/// Runs fn(i) for i in [0, count). Each index must write only to its own
/// output slots; with that discipline results are identical for any thread
/// count. threads <= 1 runs inline.
template <class Fn>
void parallel_for(std::size_t count, int threads, Fn&& fn) {
  if (threads <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  const std::size_t nw = std::min<std::size_t>(static_cast<std::size_t>(threads), count);
  std::vector<std::thread> pool;
  pool.reserve(nw);
  for (std::size_t t = 0; t < nw; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < count; i += nw) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

inline int hardware_threads() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : static_cast<int>(n);
}

} // namespace igt
