#pragma once

// Matrices copied from the published displays, used as bit-exact fixtures.

#include <string>
#include <vector>

#include "rmlab/channel.hpp"
#include "rmlab/gf2.hpp"

namespace rmlab::fixtures {

/// E(3,3) with rows 1, x1, x2, x1x2, x3, x1x3, x2x3, x1x2x3; columns are the
/// points 000, 100, 010, 110, 001, 101, 011, 111 (x1 first).
inline const char* const kRm33Text =
    "8 8\n"
    "11111111\n"
    "01010101\n"
    "00110011\n"
    "00010001\n"
    "00001111\n"
    "00000101\n"
    "00000011\n"
    "00000001\n";

inline BitMatrix pattern_a() { return BitMatrix::identity(6); }

inline BitMatrix pattern_b() {
  return BitMatrix::from_strings({
      "111000",
      "110100",
      "110010",
      "110001",
      "101111",
      "011111",
  });
}

/// Pattern over n <= 64 coordinates whose indicator is the bits of `mask`.
inline Pattern mask_pattern(std::size_t n, std::uint64_t mask) {
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < n; ++i) {
    if ((mask >> i) & 1U) support.push_back(i);
  }
  return Pattern(n, std::move(support));
}

}  // namespace rmlab::fixtures
