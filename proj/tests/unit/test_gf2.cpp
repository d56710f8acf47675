#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "fixtures.hpp"
#include "rmlab/gf2.hpp"
#include "rmlab/rm.hpp"
#include "rmlab/rng.hpp"

using namespace rmlab;

namespace {

BitMatrix augment(const BitMatrix& a, const BitVector& b) {
  BitMatrix out(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out.set(i, j, a.get(i, j));
    out.set(i, a.cols(), b.get(i));
  }
  return out;
}

bool trailing_bits_clear(const BitVector& v) {
  if (v.size() % 64 == 0) return true;
  return (v.words().back() >> (v.size() % 64)) == 0;
}

}  // namespace

TEST(BitVector, ParsesAndPrints) {
  const BitVector v = BitVector::from_string("10110");
  EXPECT_EQ(v.size(), 5u);
  EXPECT_EQ(v.weight(), 3u);
  EXPECT_TRUE(v.get(0));
  EXPECT_FALSE(v.get(1));
  EXPECT_EQ(v.to_string(), "10110");
  EXPECT_EQ(v.support(), (std::vector<std::size_t>{0, 2, 3}));
  EXPECT_THROW(BitVector::from_string("10a"), std::invalid_argument);
}

TEST(BitVector, TrailingBitsStayClear) {
  Rng rng(1);
  for (std::size_t len : {1u, 63u, 64u, 65u, 130u}) {
    EXPECT_TRUE(trailing_bits_clear(BitVector::ones(len)));
    EXPECT_EQ(BitVector::ones(len).weight(), len);
    BitVector v = BitVector::random(len, rng);
    EXPECT_TRUE(trailing_bits_clear(v));
    v ^= BitVector::ones(len);
    EXPECT_TRUE(trailing_bits_clear(v));
    EXPECT_LE(v.weight(), len);
  }
}

TEST(BitVector, NextSetWalksSupport) {
  const BitVector v = BitVector::indicator(200, std::vector<std::size_t>{3, 64, 199});
  EXPECT_EQ(v.next_set(0), 3u);
  EXPECT_EQ(v.next_set(4), 64u);
  EXPECT_EQ(v.next_set(65), 199u);
  EXPECT_EQ(v.next_set(200), 200u);
}

TEST(BitVector, LengthMismatchThrows) {
  BitVector a(3);
  EXPECT_THROW(a ^= BitVector(4), std::invalid_argument);
  EXPECT_THROW(hadamard(BitVector(3), BitVector(4)), std::invalid_argument);
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(BitMatrix::identity(8)), 8u);
  EXPECT_EQ(rank(eval_matrix(3, 3)), 8u);
  EXPECT_EQ(rank(BitMatrix::from_strings({"11", "11"})), 1u);
  EXPECT_EQ(rank(BitMatrix(0, 5)), 0u);
}

TEST(Rank, DoesNotModifyInput) {
  const BitMatrix a = BitMatrix::from_strings({"110", "011", "101"});
  const BitMatrix copy = a;
  EXPECT_EQ(rank(a), 2u);
  EXPECT_EQ(a, copy);
}

TEST(Rref, Examples) {
  const auto id = rref(BitMatrix::identity(5));
  EXPECT_EQ(id.reduced, BitMatrix::identity(5));
  EXPECT_EQ(id.pivots, (std::vector<std::size_t>{0, 1, 2, 3, 4}));

  const auto zero = rref(BitMatrix(3, 4));
  EXPECT_EQ(zero.reduced, BitMatrix(3, 4));
  EXPECT_TRUE(zero.pivots.empty());

  const auto two = rref(BitMatrix::from_strings({"110", "011"}));
  EXPECT_EQ(two.reduced, BitMatrix::from_strings({"101", "011"}));
  EXPECT_EQ(two.pivots, (std::vector<std::size_t>{0, 1}));
}

TEST(Rref, IsReducedEchelonForm) {
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const BitMatrix a = BitMatrix::random(1 + rng() % 20, 1 + rng() % 90, rng);
    const auto res = rref(a);
    ASSERT_EQ(res.pivots.size(), rank(a));
    for (std::size_t i = 0; i < res.pivots.size(); ++i) {
      if (i > 0) EXPECT_LT(res.pivots[i - 1], res.pivots[i]);
      for (std::size_t r = 0; r < res.reduced.rows(); ++r) EXPECT_EQ(res.reduced.get(r, res.pivots[i]), r == i);
      for (std::size_t c = 0; c < res.pivots[i]; ++c) EXPECT_FALSE(res.reduced.get(i, c));
    }
    for (std::size_t r = res.pivots.size(); r < res.reduced.rows(); ++r) EXPECT_TRUE(res.reduced.row(r).none());
    // Same row space: stacking does not raise the rank.
    BitMatrix stacked = a;
    for (const auto& row : res.reduced.row_vectors()) stacked.append_row(row);
    EXPECT_EQ(rank(stacked), rank(a));
  }
}

TEST(SolveAny, Examples) {
  const BitVector b = BitVector::from_string("1011");
  EXPECT_EQ(solve_any(BitMatrix::identity(4), b), b);

  const auto x = solve_any(BitMatrix::from_strings({"11"}), BitVector::from_string("1"));
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(x->to_string(), "10");  // free variable set to zero

  EXPECT_FALSE(solve_any(BitMatrix::from_strings({"1", "1"}), BitVector::from_string("10")).has_value());
  EXPECT_THROW(solve_any(BitMatrix::identity(3), BitVector(2)), std::invalid_argument);
}

TEST(SolveAny, ConsistentIffRankUnchanged) {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const BitMatrix a = BitMatrix::random(1 + rng() % 12, 1 + rng() % 12, rng);
    const BitVector b = BitVector::random(a.rows(), rng);
    const auto x = solve_any(a, b);
    EXPECT_EQ(x.has_value(), rank(a) == rank(augment(a, b)));
    if (x) EXPECT_EQ(mat_vec(a, *x), b);
  }
}

TEST(Kernel, Examples) {
  EXPECT_EQ(kernel_basis(BitMatrix::identity(4)).rows(), 0u);
  EXPECT_EQ(kernel_basis(BitMatrix::from_strings({"11"})), BitMatrix::from_strings({"11"}));
  const BitMatrix e31 = eval_matrix(3, 1);
  const BitMatrix k = kernel_basis(e31);
  EXPECT_EQ(k.rows(), 4u);
  for (const auto& row : k.row_vectors()) EXPECT_TRUE(mat_vec(e31, row).none());
}

TEST(Kernel, RankNullity) {
  Rng rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const BitMatrix a = BitMatrix::random(1 + rng() % 30, 1 + rng() % 100, rng);
    const BitMatrix k = kernel_basis(a);
    EXPECT_EQ(rank(a) + k.rows(), a.cols());
    EXPECT_EQ(rank(k), k.rows());
    if (k.rows() > 0) EXPECT_TRUE(mat_mul(a, transpose(k)) == BitMatrix(a.rows(), k.rows()));
  }
}

TEST(Products, Examples) {
  Rng rng(3);
  const BitMatrix a = BitMatrix::random(7, 9, rng);
  EXPECT_EQ(mat_mul(a, BitMatrix::identity(9)), a);
  EXPECT_EQ(transpose(transpose(a)), a);
  EXPECT_THROW(mat_mul(a, a), std::invalid_argument);

  const std::vector<std::size_t> first{0};
  const BitMatrix col = select_columns(eval_matrix(3, 3), first);
  EXPECT_EQ(transpose(col).row(0).to_string(), "10000000");

  const std::vector<std::size_t> order{2, 0};
  const BitMatrix picked = select_columns(BitMatrix::from_strings({"100", "001"}), order);
  EXPECT_EQ(picked, BitMatrix::from_strings({"01", "10"}));
  EXPECT_THROW(select_columns(a, std::vector<std::size_t>{9}), std::out_of_range);
  EXPECT_THROW(select_rows(a, std::vector<std::size_t>{7}), std::out_of_range);
}

TEST(Products, MatVecMatchesVecMatOfTranspose) {
  Rng rng(9);
  const BitMatrix a = BitMatrix::random(13, 70, rng);
  const BitVector x = BitVector::random(70, rng);
  EXPECT_EQ(mat_vec(a, x), vec_mat(x, transpose(a)));
}

TEST(Hadamard, Examples) {
  Rng rng(2);
  const BitVector u = BitVector::random(77, rng);
  EXPECT_EQ(hadamard(u, BitVector::ones(77)), u);
  EXPECT_EQ(hadamard(u, u), u);
  EXPECT_EQ(hadamard(BitVector::from_string("1100"), BitVector::from_string("1010")).to_string(), "1000");
}

TEST(RandomInvertible, Examples) {
  Rng rng(4);
  EXPECT_EQ(random_invertible(1, rng), BitMatrix::identity(1));
  for (std::size_t m = 1; m <= 20; ++m) EXPECT_EQ(rank(random_invertible(m, rng)), m);
  Rng a(99);
  Rng b(99);
  EXPECT_EQ(random_invertible(12, a), random_invertible(12, b));
  EXPECT_THROW(random_invertible(0, rng), std::invalid_argument);
}

TEST(RandomInvertible, ReachesEveryTwoByTwo) {
  // GL(2,2) has 6 elements.
  Rng rng(8);
  std::set<std::string> seen;
  for (int i = 0; i < 500; ++i) seen.insert(random_invertible(2, rng).to_text());
  EXPECT_EQ(seen.size(), 6u);
}

TEST(Properties, RankOfTransposeAndSubmatrix) {
  Rng rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const BitMatrix a = BitMatrix::random(1 + rng() % 64, 1 + rng() % 64, rng);
    EXPECT_EQ(rank(a), rank(transpose(a)));
    EXPECT_LE(rank(a), std::min(a.rows(), a.cols()));
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (rng() & 1U) cols.push_back(j);
    }
    EXPECT_LE(rank(select_columns(a, cols)), std::min(cols.size(), rank(a)));
  }
}

TEST(TextFormat, RoundTripAndErrors) {
  const BitMatrix m = BitMatrix::parse(fixtures::kRm33Text);
  EXPECT_EQ(m.rows(), 8u);
  EXPECT_EQ(m.to_text(), fixtures::kRm33Text);
  EXPECT_EQ(BitMatrix::parse("# comment\n2 3\n\n101\n# more\n011\n"), BitMatrix::from_strings({"101", "011"}));
  EXPECT_THROW(BitMatrix::parse(""), std::invalid_argument);
  EXPECT_THROW(BitMatrix::parse("2 3\n101\n"), std::invalid_argument);
  EXPECT_THROW(BitMatrix::parse("1 3\n1011\n"), std::invalid_argument);
  EXPECT_THROW(BitMatrix::parse("1 3\n1a1\n"), std::invalid_argument);
  std::ostringstream os;
  os << BitVector::from_string("01");
  EXPECT_EQ(os.str(), "01");
}
