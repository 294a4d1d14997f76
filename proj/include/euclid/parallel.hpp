#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace euclid {

/// Worker count from EUCLID_LAB_THREADS (0 or unset = hardware concurrency).
inline unsigned worker_count() {
  unsigned n = 0;
  if (const char* env = std::getenv("EUCLID_LAB_THREADS")) {
    try {
      n = static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      n = 0;
    }
  }
  if (n == 0) n = std::max(1U, std::thread::hardware_concurrency());
  return n;
}

/// Calls fn(i) for every i in [0, n), distributing indices over the worker
/// pool. Callers write results into per-index slots so the merged output
/// does not depend on scheduling. The first exception thrown by any task is
/// rethrown after all workers stop. Calls made from inside a worker run
/// inline, so nested loops do not multiply the thread count.
template <class Fn>
void parallel_for(std::size_t n, Fn&& fn) {
  static thread_local bool inside_worker = false;
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(worker_count(), n));
  if (workers <= 1 || inside_worker) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&] {
    inside_worker = true;
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(n);
        return;
      }
    }
  };
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run);
  pool.clear();
  if (error) std::rethrow_exception(error);
}

}  // namespace euclid
