#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace dynramsey {

/// Runs fn(i) for i in [0, count) over `threads` workers with a strided split.
/// Every index is processed regardless of worker count; when several indices
/// throw, the exception from the smallest index is rethrown so failures are
/// reported identically for any thread count.
template <class Fn>
void parallel_for(std::size_t count, int threads, Fn&& fn) {
  const std::size_t workers =
      threads <= 1 ? 1 : std::min<std::size_t>(static_cast<std::size_t>(threads), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::size_t> error_index(workers, count);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t t = 0; t < workers; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < count; i += workers) {
        try {
          fn(i);
        } catch (...) {
          errors[t] = std::current_exception();
          error_index[t] = i;
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  std::size_t first = workers;
  for (std::size_t t = 0; t < workers; ++t) {
    if (errors[t] && (first == workers || error_index[t] < error_index[first])) first = t;
  }
  if (first != workers) std::rethrow_exception(errors[first]);
}

}  // namespace dynramsey
