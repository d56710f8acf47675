#pragma once

#include <cmath>
#include <cstdint>

namespace rmlab {

/// Monte-Carlo success count with a normal-approximation 95% interval.
struct McEstimate {
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;

  double fraction() const { return trials == 0 ? 0.0 : static_cast<double>(successes) / static_cast<double>(trials); }
  double halfwidth() const {
    if (trials == 0) return 0.0;
    const double f = fraction();
    return 1.96 * std::sqrt(f * (1.0 - f) / static_cast<double>(trials));
  }
  bool covers(double value) const { return std::abs(fraction() - value) <= halfwidth(); }
};

/// Exact count of good cases out of an enumerated total.
struct ExactFraction {
  std::uint64_t good = 0;
  std::uint64_t total = 0;

  double value() const { return total == 0 ? 0.0 : static_cast<double>(good) / static_cast<double>(total); }
};

}  // namespace rmlab
