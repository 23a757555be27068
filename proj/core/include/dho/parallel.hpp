#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace dho {

// Hardware concurrency capped by DHO_THREADS (a positive integer).
unsigned worker_count();

// out[i] = f(i) for i < count, computed on up to worker_count() threads.
// Results land in index order, so output never depends on scheduling.
template <class F>
auto parallel_map(size_t count, F f) -> std::vector<decltype(f(size_t{}))> {
  using R = decltype(f(size_t{}));
  std::vector<R> out(count);
  const unsigned workers = static_cast<unsigned>(std::min<size_t>(worker_count(), count));
  if (workers <= 1) {
    for (size_t i = 0; i < count; ++i) out[i] = f(i);
    return out;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_lock;
  auto run = [&] {
    for (size_t i; (i = next.fetch_add(1)) < count;) {
      try {
        out[i] = f(i);
      } catch (...) {
        std::lock_guard<std::mutex> g(error_lock);
        if (!first_error) first_error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < workers; ++t) pool.emplace_back(run);
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
  return out;
}

}  // namespace dho
