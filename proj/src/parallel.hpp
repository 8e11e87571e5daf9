#pragma once

#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace tristrat::detail {

/// Runs body(chunk) for chunk in [0, chunks) on up to `workers` threads.
/// The first exception thrown by any chunk is rethrown after all threads join.
template <class Body>
void parallel_chunks(std::size_t chunks, unsigned workers, Body&& body) {
  if (workers <= 1 || chunks <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) body(c);
    return;
  }
  const std::size_t threads = std::min<std::size_t>(workers, chunks);
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (std::size_t w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t c = w; c < chunks; c += threads) body(c);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace tristrat::detail
