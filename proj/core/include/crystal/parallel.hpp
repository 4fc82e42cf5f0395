#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <future>
#include <thread>
#include <vector>

namespace crystal {

// Worker cap: CRYSTAL_CAUCHY_THREADS when set, hardware concurrency
// otherwise, always at least 1.
inline unsigned worker_count() {
  if (const char* env = std::getenv("CRYSTAL_CAUCHY_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
    return 1;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

// Applies fn to 0..count-1 on up to worker_count() threads and returns the
// results in index order, so reductions downstream stay deterministic.
template <typename R>
std::vector<R> parallel_map(size_t count, const std::function<R(size_t)>& fn) {
  const unsigned workers = std::min<size_t>(worker_count(), count ? count : 1);
  if (workers <= 1) {
    std::vector<R> out;
    out.reserve(count);
    for (size_t k = 0; k < count; ++k) out.push_back(fn(k));
    return out;
  }
  std::atomic<size_t> next{0};
  std::vector<std::promise<R>> promises(count);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      for (size_t k = next.fetch_add(1); k < count; k = next.fetch_add(1)) {
        try {
          promises[k].set_value(fn(k));
        } catch (...) {
          promises[k].set_exception(std::current_exception());
        }
      }
    });
  }
  std::vector<R> out;
  out.reserve(count);
  for (size_t k = 0; k < count; ++k) out.push_back(promises[k].get_future().get());
  for (auto& th : pool) th.join();
  return out;
}

}  // namespace crystal
