#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace rmlab {

/// Calls fn(indices) for every size-s subset of {0..n-1} in lexicographic
/// order. Stops early if fn returns false. Returns false iff stopped early.
template <class Fn>
bool for_each_combination(std::size_t n, std::size_t s, Fn&& fn) {
  if (s > n) return true;
  std::vector<std::size_t> idx(s);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (!fn(static_cast<const std::vector<std::size_t>&>(idx))) return false;
    std::size_t pos = s;
    while (pos > 0 && idx[pos - 1] == n - s + pos - 1) --pos;
    if (pos == 0) return true;
    ++idx[pos - 1];
    for (std::size_t t = pos; t < s; ++t) idx[t] = idx[t - 1] + 1;
  }
}

}  // namespace rmlab
