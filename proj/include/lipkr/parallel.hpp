#pragma once

#include <atomic>
#include <exception>
#include <thread>
#include <utility>
#include <vector>

namespace lipkr {

// Runs fn(0), ..., fn(count-1) on up to `jobs` threads. Results must be
// written to preallocated, index-owned slots so that the outcome does not
// depend on scheduling. The lowest-index exception is rethrown.
template <typename Fn>
void parallel_for(int count, int jobs, Fn&& fn) {
  if (count <= 0) return;
  if (jobs < 1) jobs = 1;
  if (jobs == 1 || count == 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  int workers = jobs < count ? jobs : count;
  std::atomic<int> next{0};
  std::vector<std::exception_ptr> errors(static_cast<size_t>(count));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        int i = next.fetch_add(1);
        if (i >= count) return;
        try {
          fn(i);
        } catch (...) {
          errors[static_cast<size_t>(i)] = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace lipkr
