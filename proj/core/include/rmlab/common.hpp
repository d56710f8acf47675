#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace rmlab {

/// Raised when an exhaustive computation would exceed its configured cap.
/// Callers never get silently truncated results.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 26;

/// 0x524D2015: "RM" in ASCII followed by 2015.
inline constexpr std::uint64_t kDefaultSeed = 1380786197ULL;

inline constexpr const char* kVersion = "1.0.0";

}  // namespace rmlab
