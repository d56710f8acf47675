#pragma once

// Corruption patterns, the uniform-weight and i.i.d. corruption models, the
// binary entropy function and capacity-gap thresholds.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "rmlab/gf2.hpp"
#include "rmlab/rm.hpp"
#include "rmlab/rng.hpp"

namespace rmlab {

/// A set of corrupted coordinates out of n.
class Pattern {
 public:
  Pattern() = default;
  /// Sorts and validates `support`; throws on duplicates or out-of-range.
  Pattern(std::size_t n, std::vector<std::size_t> support);
  static Pattern from_indicator(const BitVector& indicator);
  static Pattern full(std::size_t n);

  std::size_t n() const { return n_; }
  std::size_t weight() const { return support_.size(); }
  const std::vector<std::size_t>& support() const { return support_; }
  bool contains(std::size_t i) const;

  BitVector indicator() const;
  Pattern complement() const;
  /// Coordinates as points of F_2^m (requires n = 2^m).
  std::vector<Point> points() const { return {support_.begin(), support_.end()}; }

  friend bool operator==(const Pattern&, const Pattern&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::size_t> support_;
};

struct CorruptionModel {
  enum class Kind { UniformWeight, Iid };

  Kind kind = Kind::UniformWeight;
  /// Weight for UniformWeight (ceiled when fractional), probability for Iid.
  double value = 0.0;

  static CorruptionModel uniform(double s) { return {Kind::UniformWeight, s}; }
  static CorruptionModel iid(double p) { return {Kind::Iid, p}; }

  /// Accepts "uniform:s=<weight>" and "iid:p=<probability>".
  static CorruptionModel parse(std::string_view text);
  std::string to_string() const;

  /// Exact weight of UniformWeight(s): ceil(s).
  std::size_t uniform_weight() const;
  void validate(std::size_t n) const;
};

Pattern sample_pattern(const CorruptionModel& model, std::size_t n, Rng& rng);

/// s independent uniform points of F_2^m, with replacement.
std::vector<Point> sample_points_iid(unsigned m, std::size_t s, Rng& rng);

/// Binary entropy in bits; entropy(0) = entropy(1) = 0.
double entropy(double p);
/// The p in [0, 1/2] with entropy(p) = y, by bisection to 1e-12.
double inv_entropy(double y);

enum class Regime { LowRateBec, LowRateBsc, HighRateBec, HighRateBsc };

Regime parse_regime(std::string_view text);
std::string to_string(Regime regime);

/// Corruption probability a rate-R code has to handle to be eps-close to
/// capacity in the given regime.
double capacity_gap_threshold(Regime regime, double rate, double eps);

}  // namespace rmlab
