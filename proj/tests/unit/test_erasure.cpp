#include <gtest/gtest.h>

#include <cmath>

#include "fixtures.hpp"
#include "rmlab/combinatorics.hpp"
#include "rmlab/erasure.hpp"
#include "rmlab/rng.hpp"

using namespace rmlab;

namespace {

// All codewords of ker(h) by Gray-code walk over a kernel basis.
std::vector<BitVector> codewords(const BitMatrix& h) {
  const BitMatrix basis = kernel_basis(h);
  std::vector<BitVector> out{BitVector(h.cols())};
  BitVector w(h.cols());
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << basis.rows()); ++i) {
    w ^= basis.row(static_cast<std::size_t>(std::countr_zero(i)));
    out.push_back(w);
  }
  return out;
}

}  // namespace

TEST(ErasureCorrectable, Examples) {
  const BitMatrix e31 = eval_matrix(3, 1);
  EXPECT_TRUE(erasure_correctable(e31, Pattern(8, {})));
  // e1, e2, e3 as points: masks 1, 2, 4.
  EXPECT_TRUE(erasure_correctable(e31, Pattern(8, {1, 2, 4})));
  EXPECT_FALSE(erasure_correctable(e31, Pattern::full(8)));
  // 0, e1, e2, e1+e2 is an affine plane: dependent in E(3,1).
  EXPECT_FALSE(erasure_correctable(e31, Pattern(8, {0, 1, 2, 3})));
}

TEST(DecodeErasures, Examples) {
  const RmCode c(3, 1);
  const BitMatrix h = c.parity_check();
  const BitVector w = c.encode(BitVector::from_string("1010"));

  auto res = decode_erasures(h, ErasedWord(w, Pattern(8, {})));
  EXPECT_EQ(res.status, ErasureDecodeResult::Status::Unique);
  EXPECT_EQ(*res.codeword, w);

  BitVector bad = w;
  bad.flip(0);
  EXPECT_EQ(decode_erasures(h, ErasedWord(bad, Pattern(8, {}))).status, ErasureDecodeResult::Status::Inconsistent);

  const BitMatrix rep = RmCode(1, 0).parity_check();
  res = decode_erasures(rep, ErasedWord(BitVector::from_string("11"), Pattern(2, {1})));
  EXPECT_EQ(res.status, ErasureDecodeResult::Status::Unique);
  EXPECT_EQ(res.codeword->to_string(), "11");

  res = decode_erasures(h, ErasedWord(w, Pattern(8, {0, 1, 2, 3})));
  EXPECT_EQ(res.status, ErasureDecodeResult::Status::Ambiguous);
  ASSERT_TRUE(res.codeword.has_value());
  EXPECT_TRUE(mat_vec(h, *res.codeword).none());
  for (std::size_t i = 4; i < 8; ++i) EXPECT_EQ(res.codeword->get(i), w.get(i));
}

TEST(DualRankEquivalence, Examples) {
  EXPECT_EQ(dual_rank_equivalence(4, 1, Pattern(16, {})), std::make_pair(true, true));
  EXPECT_EQ(dual_rank_equivalence(4, 1, Pattern(16, {0})), std::make_pair(true, true));
  for (std::size_t s = 0; s <= 3; ++s) {
    for_each_combination(16, s, [&](const std::vector<std::size_t>& idx) {
      const auto [a, b] = dual_rank_equivalence(4, 1, Pattern(16, idx));
      EXPECT_EQ(a, b);
      return true;
    });
  }
}

TEST(DualRankEquivalence, AllPatternsSmallM) {
  for (unsigned m = 1; m <= 3; ++m) {
    const std::size_t n = std::size_t{1} << m;
    for (unsigned d = 0; d < m; ++d) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        const Pattern s = fixtures::mask_pattern(n, mask);
        const auto [a, b] = dual_rank_equivalence(m, d, s);
        EXPECT_EQ(a, b) << "m=" << m << " d=" << d << " mask=" << mask;
      }
    }
  }
}

TEST(ErasureViews, AgreeOnRandomCodes) {
  Rng rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 4 + rng() % 9;  // codeword enumeration stays small
    const BitMatrix h = BitMatrix::random(1 + rng() % (n - 1), n, rng);
    const BitMatrix g = kernel_basis(h);
    const auto words = codewords(h);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      const Pattern s = fixtures::mask_pattern(n, mask);
      const bool by_rank = erasure_correctable(h, s);
      bool by_decode = true;
      for (const auto& w : words) {
        const auto res = decode_erasures(h, ErasedWord(w, s));
        by_decode = by_decode && res.status == ErasureDecodeResult::Status::Unique && *res.codeword == w;
      }
      EXPECT_EQ(by_rank, by_decode);
      EXPECT_EQ(by_rank, generator_recovers(g, s));
    }
  }
}

TEST(ErasureViews, AgreeOnRm5) {
  // n = 32: decode a random codeword instead of all of them.
  Rng rng(22);
  for (unsigned r = 0; r < 5; ++r) {
    const RmCode c(5, r);
    const BitMatrix h = c.parity_check();
    for (int trial = 0; trial < 300; ++trial) {
      const Pattern s = sample_pattern(CorruptionModel::iid(0.25), 32, rng);
      const BitVector w = c.encode(BitVector::random(c.k(), rng));
      const bool by_rank = erasure_correctable(h, s);
      const auto res = decode_erasures(h, ErasedWord(w, s));
      EXPECT_EQ(by_rank, res.status == ErasureDecodeResult::Status::Unique);
      if (by_rank) EXPECT_EQ(*res.codeword, w);
      EXPECT_EQ(by_rank, generator_recovers(c.generator(), s));
    }
  }
}

TEST(ErasureCorrectable, MonotoneUnderSupersets) {
  Rng rng(23);
  const BitMatrix h = eval_matrix(4, 1);
  for (int trial = 0; trial < 500; ++trial) {
    const Pattern s = sample_pattern(CorruptionModel::iid(0.2), 16, rng);
    if (erasure_correctable(h, s)) continue;
    BitVector bigger = s.indicator();
    bigger |= BitVector::random(16, rng);
    EXPECT_FALSE(erasure_correctable(h, Pattern::from_indicator(bigger)));
  }
}

TEST(McErasure, TrivialModels) {
  const RmCode c(4, 2);
  EXPECT_EQ(mc_erasure_success(c, CorruptionModel::uniform(0), 200, 1).fraction(), 1.0);
  EXPECT_EQ(mc_erasure_success(c, CorruptionModel::uniform(16), 200, 1).fraction(), 0.0);
  const auto e = mc_erasure_success(c, CorruptionModel::uniform(3), 1000, 1);
  EXPECT_EQ(e.trials, 1000u);
  EXPECT_NEAR(e.halfwidth(), 1.96 * std::sqrt(e.fraction() * (1 - e.fraction()) / 1000), 1e-15);
  EXPECT_THROW(mc_erasure_success(RmCode(17, 1), CorruptionModel::uniform(1), 1, 1), BudgetExceeded);
}

TEST(McErasure, MatchesExactWithinThreeSigma) {
  for (unsigned r = 1; r <= 2; ++r) {
    const RmCode c(4, r);
    for (std::size_t s = 0; s <= 10; ++s) {
      const double exact = exact_erasure_success(c, s).value();
      const auto mc = mc_erasure_success(c, CorruptionModel::uniform(static_cast<double>(s)), 4000, kDefaultSeed);
      const double sigma = std::sqrt(exact * (1 - exact) / 4000.0);
      EXPECT_LE(std::abs(mc.fraction() - exact), 3 * sigma + 1e-12) << c.name() << " s=" << s;
    }
  }
}

TEST(McErasure, IidMatchesMixtureOfUniform) {
  // i.i.d. erasures are a binomial mixture of uniform-weight ones.
  for (unsigned r = 1; r <= 2; ++r) {
    const RmCode c(4, r);
    for (double p : {0.1, 0.3, 0.5}) {
      const double exact = exact_erasure_success_iid(c, p);
      const auto mc = mc_erasure_success(c, CorruptionModel::iid(p), 4000, 17);
      EXPECT_LE(std::abs(mc.fraction() - exact), 3 * std::sqrt(exact * (1 - exact) / 4000.0) + 1e-12)
          << c.name() << " p=" << p;
    }
  }
}

TEST(ExactErasure, FrozenValues) {
  // RM(4,1): parity check E(4,2), which has d = 4; patterns of weight <= 3 all recover.
  const RmCode c(4, 1);
  EXPECT_EQ(exact_erasure_success(c, 3).good, 560u);
  const auto s4 = exact_erasure_success(c, 4);
  EXPECT_EQ(s4.total, 1820u);
  EXPECT_EQ(s4.good, 1820u);
  // RM(4,2): parity check E(4,1); the 140 affine planes are the dependent 4-sets.
  const auto p4 = exact_erasure_success(RmCode(4, 2), 4);
  EXPECT_EQ(p4.good, 1820u - 140u);
  EXPECT_EQ(exact_erasure_success(RmCode(4, 2), 0).good, 1u);
  EXPECT_EQ(exact_erasure_success(RmCode(4, 2), 6).good, 0u);  // 6 > n - k = 5
  EXPECT_THROW(exact_erasure_success(RmCode(6, 1), 8, 1000), BudgetExceeded);
}

TEST(ExactErasure, IidMixture) {
  const RmCode c(4, 1);
  EXPECT_DOUBLE_EQ(exact_erasure_success_iid(c, 0.0), 1.0);
  EXPECT_DOUBLE_EQ(exact_erasure_success_iid(c, 1.0), 0.0);
  double mix = 0;
  for (std::size_t s = 0; s <= 16; ++s) {
    mix += binom(16, s).convert_to<double>() * std::pow(0.3, s) * std::pow(0.7, 16 - s) *
           exact_erasure_success(c, s).value();
  }
  EXPECT_NEAR(exact_erasure_success_iid(c, 0.3), mix, 1e-12);
}

TEST(Span, Examples) {
  EXPECT_EQ(mc_span_success(4, 2, 10, 200, 1).fraction(), 0.0);  // 10 < 11
  EXPECT_EQ(mc_span_success(1, 0, 1, 200, 1).fraction(), 1.0);
  EXPECT_DOUBLE_EQ(exact_span_probability(1, 0, 1), 1.0);
  EXPECT_DOUBLE_EQ(exact_span_probability(2, 1, 2), 0.0);
  // Three points span F_2^3 (affinely span F_2^2) iff they are distinct: 4*3*2/64.
  EXPECT_DOUBLE_EQ(exact_span_probability(2, 1, 3), 24.0 / 64.0);
  EXPECT_DOUBLE_EQ(affine_span_probability(2, 3), 24.0 / 64.0);
}

TEST(Span, AffineChainMatchesEnumeration) {
  for (unsigned m = 1; m <= 3; ++m) {
    for (std::size_t s = 0; s <= 6; ++s) {
      if ((std::uint64_t{1} << (m * s)) > (std::uint64_t{1} << 20)) continue;
      EXPECT_NEAR(affine_span_probability(m, s), exact_span_probability(m, 1, s), 1e-12) << m << " " << s;
    }
  }
}

TEST(Span, MonteCarloMatchesAffineChain) {
  const unsigned m = 10;
  const std::size_t s = 15;  // ceil(1.3 * 11)
  const double exact = affine_span_probability(m, s);
  const auto mc = mc_span_success(m, 1, s, 1000, kDefaultSeed);
  EXPECT_LE(std::abs(mc.fraction() - exact), 3 * std::sqrt(exact * (1 - exact) / 1000));
}

TEST(Span, FailureShrinksWithM) {
  // s = ceil((1 + delta) k) with r = 1. The ceiling makes single steps in m
  // uneven at small delta, so delta = 1/2 is compared two steps apart.
  auto p = [](unsigned m, double delta) {
    return affine_span_probability(m, static_cast<std::size_t>(std::ceil((1 + delta) * (m + 1))));
  };
  for (unsigned m = 3; m < 12; ++m) EXPECT_GT(p(m + 1, 1.0), p(m, 1.0)) << "m=" << m;
  for (unsigned m = 3; m + 2 <= 12; ++m) EXPECT_GT(p(m + 2, 0.5), p(m, 0.5)) << "m=" << m;
  EXPECT_GT(p(12, 1.0), 0.9998);
}

TEST(Determinism, SameSeedSameCounts) {
  const RmCode c(5, 2);
  const auto a = mc_erasure_success(c, CorruptionModel::iid(0.2), 3000, 99);
  const auto b = mc_erasure_success(c, CorruptionModel::iid(0.2), 3000, 99);
  EXPECT_EQ(a.successes, b.successes);
  EXPECT_EQ(mc_span_success(5, 2, 20, 500, 4).successes, mc_span_success(5, 2, 20, 500, 4).successes);
}
