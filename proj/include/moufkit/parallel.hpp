#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace moufkit {

/// Number of worker threads for internal scans. MOUFKIT_THREADS caps it;
/// unset means hardware concurrency.
inline unsigned worker_count() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("MOUFKIT_THREADS")) {
    try {
      long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(std::min<long>(v, hw * 4L));
    } catch (...) {
    }
    return 1;
  }
  return hw;
}

namespace detail {

/// Finds the smallest `i` in [0, n) for which `probe(i)` yields a value and
/// returns that value. Indices are claimed in increasing order, so the result
/// is identical to a serial scan regardless of the worker count.
template <class Probe>
auto first_hit(std::size_t n, Probe probe) -> decltype(probe(std::size_t{})) {
  using result_t = decltype(probe(std::size_t{}));
  unsigned workers = static_cast<unsigned>(std::min<std::size_t>(worker_count(), n));
  if (workers <= 1 || n < 16) {
    for (std::size_t i = 0; i < n; ++i) {
      if (auto r = probe(i)) return r;
    }
    return result_t{};
  }

  std::vector<result_t> hits(n);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{n};
  auto run = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= n || i > best.load()) return;
      if (auto r = probe(i)) {
        hits[i] = std::move(r);
        std::size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();
  std::size_t b = best.load();
  return b < n ? std::move(hits[b]) : result_t{};
}

}  // namespace detail
}  // namespace moufkit
