#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <utility>
#include <vector>

namespace rmlab {

/// Worker count: RMLAB_THREADS if set and positive, else hardware concurrency.
unsigned worker_count();

/// Splits [0, total) into at most worker_count() contiguous chunks and runs
/// `body(begin, end)` for each on its own thread. Results come back in chunk
/// order. Callers merge by summation so the outcome is independent of the
/// split.
template <class T, class Body>
std::vector<T> parallel_map_chunks(std::uint64_t total, Body body) {
  const std::uint64_t workers =
      std::clamp<std::uint64_t>(worker_count(), 1, std::max<std::uint64_t>(total, 1));
  const std::uint64_t chunk = (total + workers - 1) / workers;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> ranges{{0, std::min(total, chunk)}};
  while (ranges.back().second < total) {
    const std::uint64_t begin = ranges.back().second;
    ranges.emplace_back(begin, std::min(total, begin + chunk));
  }
  std::vector<T> results(ranges.size());
  if (ranges.size() == 1) {
    results[0] = body(ranges[0].first, ranges[0].second);
    return results;
  }
  std::vector<std::exception_ptr> errors(ranges.size());
  std::vector<std::thread> threads;
  threads.reserve(ranges.size());
  for (std::size_t i = 0; i < ranges.size(); ++i) {
    threads.emplace_back([&, i] {
      try {
        results[i] = body(ranges[i].first, ranges[i].second);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

template <class Body>
std::uint64_t parallel_sum(std::uint64_t total, Body body) {
  std::uint64_t sum = 0;
  for (std::uint64_t part : parallel_map_chunks<std::uint64_t>(total, body)) sum += part;
  return sum;
}

}  // namespace rmlab
