#pragma once

// Weight distributions of small RM codes, the weight-distribution and
// union-bound evaluators, generalized Hamming weights (Wei's formula and a
// brute-force oracle), and two binomial identities used with them.

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rmlab/common.hpp"
#include "rmlab/gf2.hpp"
#include "rmlab/rm.hpp"

namespace rmlab {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

struct WeightDistribution {
  unsigned m = 0;
  unsigned r = 0;
  /// counts[w] = number of codewords of weight w, w = 0..n.
  std::vector<std::uint64_t> counts;

  std::size_t n() const { return counts.empty() ? 0 : counts.size() - 1; }
  std::uint64_t total() const;
  /// Smallest nonzero weight with a codeword, or 0 for the zero code.
  std::size_t min_nonzero_weight() const;
};

/// Exact distribution of RM(m, r) by a Gray-code walk over all 2^k messages,
/// one generator-row XOR per step. Requires 2^k <= budget.
WeightDistribution enumerate_weights(unsigned m, unsigned r, std::uint64_t budget = kDefaultBudget);

/// Same walk for an arbitrary k x n generator.
std::vector<std::uint64_t> enumerate_weights(const BitMatrix& generator, std::uint64_t budget = kDefaultBudget);

/// Number of codewords with weight <= alpha * n.
std::uint64_t cumulative_weight(const WeightDistribution& dist, double alpha);

/// log2 of the weight-distribution bound
///   W_{m,r}((1-eps) 2^-ell) <= (1/eps)^(8 c ell^4 C(m-ell, <= r-ell)).
struct KlpExponent {
  BigInt coefficient;        // 8 * ell^4 * C(m-ell, <= r-ell), exact
  double c = 1.0;            // caller-supplied absolute constant
  double log2_inv_eps = 0;   // log2(1/eps)

  double log2_bound() const { return c * coefficient.convert_to<double>() * log2_inv_eps; }
};

/// Hypotheses: 1 <= ell <= r-1, r-1 < m/4, 0 < eps <= 1/2, c > 0.
KlpExponent klp_bound(unsigned m, unsigned r, unsigned ell, double eps, double c = 1.0);

/// Smallest c for which the bound's exponent reaches log2 W_{m,r}((1-eps) 2^-ell)
/// on the given exact distribution (0 if W is 1).
double klp_minimal_constant(const WeightDistribution& dist, unsigned ell, double eps);

/// Union bound on the fraction of bad weight-s error patterns:
///   sum over even w in [d, n] of N(w) C(w, w/2) C(n-w, s-w/2) / C(n, s).
/// Weights in (n-d, n) carry no codewords; w = n contributes only at s = n/2.
/// Exact rational; may exceed 1. Requires s <= n/2.
BigRational bsc_union_bound(const WeightDistribution& dist, std::size_t s);

BigInt big_binom(std::uint64_t n, std::uint64_t k);

/// a = sum_i C(m_i, <= r_i) with m_i - r_i = m - r - i + 1.
struct WeiRepresentation {
  std::vector<std::pair<unsigned, unsigned>> terms;  // (m_i, r_i)
};

WeiRepresentation wei_rep(std::uint64_t a, unsigned m, unsigned r);

/// d_a(RM(m, r)) = sum_i 2^{m_i} over wei_rep(a, m, r).
std::uint64_t ghw(unsigned m, unsigned r, std::uint64_t a);

struct GhwTable {
  unsigned m = 0;
  unsigned r = 0;
  std::vector<std::uint64_t> d;  // d[a-1] = d_a, a = 1..k
};

GhwTable ghw_table(unsigned m, unsigned r);

/// Number of a-dimensional subspaces of F_2^k.
WideCount gaussian_binomial(unsigned k, unsigned a);

/// Minimum support size over all a-dimensional subcodes, enumerating each
/// subspace exactly once through its reduced row-echelon basis. Requires
/// gaussian_binomial(k, a) <= budget.
std::uint64_t ghw_bruteforce(unsigned m, unsigned r, unsigned a, std::uint64_t budget = 1000000);

/// C(m, <= r) - sum_{i=1}^{t} C(m-i, <= r-1) == C(m-t, <= r), evaluated exactly.
bool binomial_identity_check(unsigned m, unsigned r, unsigned t);

struct EstimationCheck {
  bool hypotheses_hold = false;  // r < sqrt(delta m / (4 log2 m)) and eps > m^(-r/2)
  bool inequality_holds = false;
  std::int64_t reduced_m = 0;    // floor(m - log2 C(m,<=r) - log2(1/eps))
  double lhs = 0;                // C(reduced_m, <= r)
  double rhs = 0;                // (1 - delta) C(m, <= r)

  /// True only when the hypotheses hold and the inequality is satisfied.
  bool verdict() const { return hypotheses_hold && inequality_holds; }
};

EstimationCheck estimation_small_r_check(unsigned m, unsigned r, double delta, double eps);

}  // namespace rmlab
