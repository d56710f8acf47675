#pragma once

#include <cstdint>
#include <random>

namespace rmlab {

using Rng = std::mt19937_64;

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed of the substream used by trial `index` of a run seeded with `seed`:
/// splitmix64(seed ^ splitmix64(index)). Any single trial can be replayed by
/// constructing `substream(seed, index)`.
constexpr std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(seed ^ splitmix64(index));
}

inline Rng substream(std::uint64_t seed, std::uint64_t index) {
  return Rng{substream_seed(seed, index)};
}

}  // namespace rmlab
