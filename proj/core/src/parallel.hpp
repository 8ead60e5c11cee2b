#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace phifact::detail {

// Calls body(begin, end) on `jobs` contiguous slices of [0, count). Slices are
// fixed by (count, jobs) alone, so callers writing into per-index slots get
// identical output for any job count. The first exception is rethrown.
template <typename Body>
void parallel_slices(std::size_t count, unsigned jobs, Body&& body) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (jobs == 1) {
    body(std::size_t{0}, count);
    return;
  }
  std::vector<std::exception_ptr> errors(jobs);
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (unsigned j = 0; j < jobs; ++j) {
    const std::size_t begin = count * j / jobs;
    const std::size_t end = count * (j + 1) / jobs;
    workers.emplace_back([&, j, begin, end] {
      try {
        body(begin, end);
      } catch (...) {
        errors[j] = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace phifact::detail
