#pragma once

#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "shortint/budget.hpp"

namespace shortint {

// Runs fn(i) for i in [0, n). Work is split into fixed blocks by index, and
// callers write results into preallocated slots, so the outcome is identical
// for any worker count.
template <class F>
void parallel_for(u64 n, int workers, F&& fn) {
  if (workers <= 1 || n <= 1) {
    for (u64 i = 0; i < n; ++i) fn(i);
    return;
  }
  u64 w = std::min<u64>(workers, n);
  std::vector<std::thread> pool;
  std::exception_ptr first_error;
  std::mutex err_mtx;
  for (u64 t = 0; t < w; ++t) {
    u64 lo = n * t / w, hi = n * (t + 1) / w;
    pool.emplace_back([&, lo, hi] {
      try {
        for (u64 i = lo; i < hi; ++i) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lk(err_mtx);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace shortint
