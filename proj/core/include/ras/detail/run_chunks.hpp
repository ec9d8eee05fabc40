#pragma once

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

namespace ras {

template <class Result, class Fn>
std::vector<Result> run_chunks(std::uint64_t count, unsigned jobs, Fn&& fn) {
  jobs = std::max(1u, jobs);
  const std::uint64_t chunks = std::max<std::uint64_t>(1, std::min<std::uint64_t>(count, jobs));
  std::vector<Result> results(chunks);
  auto bounds = [&](std::uint64_t c) {
    return std::pair{count * c / chunks, count * (c + 1) / chunks};
  };
  if (chunks == 1) {
    results[0] = fn(std::uint64_t{0}, count);
    return results;
  }
  std::vector<std::exception_ptr> errors(chunks);
  {
    std::vector<std::jthread> workers;
    workers.reserve(chunks);
    for (std::uint64_t c = 0; c < chunks; ++c) {
      workers.emplace_back([&, c] {
        try {
          auto [lo, hi] = bounds(c);
          results[c] = fn(lo, hi);
        } catch (...) {
          errors[c] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace ras
