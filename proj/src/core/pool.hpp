#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace fillprobe {

// Runs body(i) for i in [0, n) on up to `workers` threads. Results must be
// written by index; the first exception by index is rethrown after all
// threads finish, so failures are reported deterministically.
template <class Body>
void parallel_for(std::size_t n, unsigned workers, Body&& body) {
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        body(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned count = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(n)));
  if (count <= 1) {
    run();
  } else {
    std::vector<std::thread> threads;
    for (unsigned t = 0; t < count; ++t) threads.emplace_back(run);
    for (auto& t : threads) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

inline unsigned default_workers() { return std::max(1u, std::thread::hardware_concurrency()); }

}  // namespace fillprobe
