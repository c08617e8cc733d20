#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace moment {

/// Runs body(chunk) for every chunk in [0, chunks) on at most `threads` workers.
///
/// Work is split into caller-defined chunks, so any per-chunk results the caller
/// stores by index and folds in index order are independent of the thread count.
/// The first exception (lowest chunk index) is rethrown on the calling thread.
inline void parallel_for_chunks(std::size_t chunks, unsigned threads,
                                const std::function<void(std::size_t)>& body) {
  if (chunks == 0) return;
  const std::size_t workers = std::clamp<std::size_t>(threads, 1, chunks);
  if (workers == 1) {
    for (std::size_t c = 0; c < chunks; ++c) body(c);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  std::size_t error_chunk = chunks;
  auto worker = [&] {
    for (;;) {
      const std::size_t c = next.fetch_add(1);
      if (c >= chunks) return;
      try {
        body(c);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (c < error_chunk) {
          error_chunk = c;
          error = std::current_exception();
        }
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

/// Pairwise (tree) sum of values in index order.
template <typename T>
T pairwise_sum(const std::vector<T>& values, std::size_t lo, std::size_t hi) {
  if (hi <= lo) return T{};
  if (hi - lo == 1) return values[lo];
  const std::size_t mid = lo + (hi - lo) / 2;
  return pairwise_sum(values, lo, mid) + pairwise_sum(values, mid, hi);
}

template <typename T>
T pairwise_sum(const std::vector<T>& values) {
  return pairwise_sum(values, 0, values.size());
}

}  // namespace moment
