#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace ddgf {

// Worker cap: min(hardware_concurrency, DDG_FORGE_THREADS) with a floor of 1.
std::size_t worker_count();

// Runs fn(begin, end) over a fixed chunking of [0, n). Chunk boundaries depend
// only on n and the worker cap, and every chunk writes disjoint output, so the
// result is identical to sequential execution.
template <class Fn>
void parallel_chunks(std::size_t n, Fn&& fn) {
  const std::size_t workers = worker_count();
  if (n == 0) return;
  if (workers <= 1 || n < 2 * workers) {
    fn(std::size_t{0}, n);
    return;
  }
  const std::size_t chunk = (n + workers - 1) / workers;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t begin = 0; begin < n; begin += chunk) {
    const std::size_t end = begin + chunk < n ? begin + chunk : n;
    pool.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace ddgf
