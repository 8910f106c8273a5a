#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace kirillov {

/// Default worker count: KIRILLOV_WORKERS if set, else the hardware concurrency.
inline unsigned default_workers() {
  if (const char* env = std::getenv("KIRILLOV_WORKERS")) {
    const int w = std::atoi(env);
    if (w >= 1) return static_cast<unsigned>(w);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

/// Runs body(worker, slice) for every slice in [0, slices), handing slices out
/// dynamically to `workers` threads. The first exception thrown is rethrown.
template <class Body>
void parallel_slices(std::size_t slices, unsigned workers, Body&& body) {
  workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(slices, 1))));
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&](unsigned worker) {
    for (;;) {
      const std::size_t slice = next.fetch_add(1);
      if (slice >= slices || stop.load()) return;
      try {
        body(worker, slice);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        stop = true;
        return;
      }
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run, w);
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace kirillov
