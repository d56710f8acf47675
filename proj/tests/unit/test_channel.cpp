#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "rmlab/channel.hpp"
#include "rmlab/rng.hpp"

using namespace rmlab;

TEST(Pattern, Basics) {
  const Pattern p(8, {5, 1, 3});
  EXPECT_EQ(p.support(), (std::vector<std::size_t>{1, 3, 5}));
  EXPECT_EQ(p.weight(), 3u);
  EXPECT_TRUE(p.contains(3));
  EXPECT_FALSE(p.contains(4));
  EXPECT_EQ(p.indicator().to_string(), "01010100");
  EXPECT_EQ(p.complement().support(), (std::vector<std::size_t>{0, 2, 4, 6, 7}));
  EXPECT_EQ(Pattern::from_indicator(p.indicator()), p);
  EXPECT_EQ(Pattern::full(4).weight(), 4u);
  EXPECT_THROW(Pattern(4, {1, 1}), std::invalid_argument);
  EXPECT_THROW(Pattern(4, {4}), std::out_of_range);
}

TEST(CorruptionModel, ParseAndValidate) {
  const auto u = CorruptionModel::parse("uniform:s=3");
  EXPECT_EQ(u.kind, CorruptionModel::Kind::UniformWeight);
  EXPECT_EQ(u.uniform_weight(), 3u);
  EXPECT_EQ(CorruptionModel::parse("uniform:s=2.2").uniform_weight(), 3u);  // ceiled
  const auto i = CorruptionModel::parse("iid:p=0.25");
  EXPECT_EQ(i.kind, CorruptionModel::Kind::Iid);
  EXPECT_DOUBLE_EQ(i.value, 0.25);
  EXPECT_EQ(CorruptionModel::parse(u.to_string()).value, u.value);
  EXPECT_EQ(CorruptionModel::parse(i.to_string()).value, i.value);
  for (const char* bad : {"uniform", "uniform:p=1", "iid:p=1.5", "iid:p=x", "gauss:s=1", "uniform:s=-1", "iid:p=0.1x"}) {
    EXPECT_THROW(CorruptionModel::parse(bad), std::invalid_argument) << bad;
  }
  EXPECT_THROW(CorruptionModel::uniform(9).validate(8), std::invalid_argument);
  EXPECT_NO_THROW(CorruptionModel::uniform(8).validate(8));
}

TEST(SamplePattern, Examples) {
  Rng rng(1);
  EXPECT_EQ(sample_pattern(CorruptionModel::uniform(0), 16, rng).weight(), 0u);
  EXPECT_EQ(sample_pattern(CorruptionModel::uniform(16), 16, rng), Pattern::full(16));
  EXPECT_EQ(sample_pattern(CorruptionModel::uniform(2.5), 16, rng).weight(), 3u);
  EXPECT_EQ(sample_pattern(CorruptionModel::iid(0), 16, rng).weight(), 0u);
  EXPECT_EQ(sample_pattern(CorruptionModel::iid(1), 16, rng).weight(), 16u);
  EXPECT_THROW(sample_pattern(CorruptionModel::uniform(17), 16, rng), std::invalid_argument);

  Rng a(42);
  Rng b(42);
  EXPECT_EQ(sample_pattern(CorruptionModel::iid(0.3), 1000, a), sample_pattern(CorruptionModel::iid(0.3), 1000, b));
}

TEST(SamplePattern, IidMeanWeight) {
  const std::size_t n = 100000;
  const double p = 0.3;
  const double sigma = std::sqrt(n * p * (1 - p));
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng = substream(kDefaultSeed, seed);
    const double w = static_cast<double>(sample_pattern(CorruptionModel::iid(p), n, rng).weight());
    EXPECT_LE(std::abs(w - n * p), 3 * sigma + 1) << "seed " << seed;
  }
}

TEST(SamplePattern, UniformWeightIsUniformOverSubsets) {
  Rng rng(2024);
  const int draws = 100000;
  std::map<std::vector<std::size_t>, int> counts;
  for (int i = 0; i < draws; ++i) ++counts[sample_pattern(CorruptionModel::uniform(2), 5, rng).support()];
  ASSERT_EQ(counts.size(), 10u);
  const double sigma = std::sqrt(draws * 0.1 * 0.9);
  for (const auto& [subset, c] : counts) EXPECT_LE(std::abs(c - draws * 0.1), 3 * sigma);
}

TEST(SamplePoints, Examples) {
  Rng rng(3);
  EXPECT_TRUE(sample_points_iid(4, 0, rng).empty());
  const auto pts = sample_points_iid(1, 10000, rng);
  ASSERT_EQ(pts.size(), 10000u);
  double ones = 0;
  for (Point p : pts) {
    EXPECT_LE(p, 1u);
    ones += static_cast<double>(p);
  }
  EXPECT_LE(std::abs(ones - 5000), 3 * std::sqrt(10000 * 0.25));
  for (Point p : sample_points_iid(10, 1000, rng)) EXPECT_LT(p, 1024u);
  Rng a(5);
  Rng b(5);
  EXPECT_EQ(sample_points_iid(20, 50, a), sample_points_iid(20, 50, b));
}

TEST(Entropy, Examples) {
  EXPECT_DOUBLE_EQ(entropy(0.5), 1.0);
  EXPECT_EQ(entropy(0.0), 0.0);
  EXPECT_EQ(entropy(1.0), 0.0);
  EXPECT_THROW(entropy(1.5), std::domain_error);
  EXPECT_THROW(inv_entropy(-0.1), std::domain_error);
  for (double p = 0.0; p <= 1.0; p += 0.01) EXPECT_NEAR(entropy(p), entropy(1.0 - p), 1e-12);
}

TEST(Entropy, InverseRoundTrip) {
  for (int i = 0; i <= 10; ++i) {
    const double y = i / 10.0;
    const double p = inv_entropy(y);
    EXPECT_GE(p, 0.0);
    EXPECT_LE(p, 0.5);
    EXPECT_NEAR(entropy(p), y, 1e-10);
  }
}

TEST(Entropy, ExpansionNearOneHalf) {
  const double xi = 1e-3;
  const double y = 1.0 - xi * xi / (2.0 * std::log(2.0));
  EXPECT_NEAR(inv_entropy(y), 0.5 - xi / 2.0, 1e-6);
}

TEST(Capacity, Thresholds) {
  EXPECT_NEAR(capacity_gap_threshold(Regime::LowRateBec, 0.01, 0.0), 0.99, 1e-15);
  EXPECT_NEAR(capacity_gap_threshold(Regime::HighRateBec, 0.9, 0.0), 0.1, 1e-15);
  EXPECT_NEAR(capacity_gap_threshold(Regime::LowRateBsc, 0.1, 0.0), inv_entropy(0.9), 1e-15);
  EXPECT_NEAR(capacity_gap_threshold(Regime::LowRateBsc, 0.1, 0.0), 0.3160, 1e-4);
  EXPECT_NEAR(capacity_gap_threshold(Regime::HighRateBsc, 0.9, 0.5), inv_entropy(0.05), 1e-15);
  EXPECT_EQ(capacity_gap_threshold(Regime::LowRateBec, 0.9, 0.5), 0.0);  // clamped
  EXPECT_THROW(capacity_gap_threshold(Regime::LowRateBsc, 0.9, 0.5), std::domain_error);
  EXPECT_THROW(capacity_gap_threshold(Regime::HighRateBec, 1.0, 0.0), std::domain_error);
  EXPECT_THROW(capacity_gap_threshold(Regime::HighRateBec, 0.5, -0.1), std::domain_error);
  for (const char* name : {"low-bec", "low-bsc", "high-bec", "high-bsc"}) EXPECT_EQ(to_string(parse_regime(name)), name);
  EXPECT_THROW(parse_regime("mid-bec"), std::invalid_argument);
}
