#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace biset {

inline std::atomic<int>& jobs_setting() {
  static std::atomic<int> jobs{1};
  return jobs;
}
inline int jobs() { return jobs_setting().load(); }
inline void set_jobs(int n) { jobs_setting().store(std::max(1, n)); }

// Runs fn(i) for i in [0, n) on up to jobs() threads; rethrows the first exception.
inline void parallel_for(int n, const std::function<void(int)>& fn) {
  int t = std::min(jobs(), n);
  if (t <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex mu;
  std::vector<std::thread> pool;
  for (int k = 0; k < t; ++k) {
    pool.emplace_back([&] {
      for (int i; (i = next.fetch_add(1)) < n;) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(mu);
          if (!error) error = std::current_exception();
          next.store(n);
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace biset
