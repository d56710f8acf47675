#include "rmlab/spectrum.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "rmlab/combinatorics.hpp"
#include "rmlab/parallel.hpp"

namespace rmlab {

std::uint64_t WeightDistribution::total() const {
  std::uint64_t sum = 0;
  for (std::uint64_t c : counts) sum += c;
  return sum;
}

std::size_t WeightDistribution::min_nonzero_weight() const {
  for (std::size_t w = 1; w < counts.size(); ++w) {
    if (counts[w] != 0) return w;
  }
  return 0;
}

std::vector<std::uint64_t> enumerate_weights(const BitMatrix& generator, std::uint64_t budget) {
  const std::size_t k = generator.rows();
  if (k >= 63 || (std::uint64_t{1} << k) > budget) throw BudgetExceeded("2^k codewords exceed the enumeration budget");
  const std::size_t n = generator.cols();
  const std::uint64_t total = std::uint64_t{1} << k;

  auto parts = parallel_map_chunks<std::vector<std::uint64_t>>(total, [&](std::uint64_t begin, std::uint64_t end) {
    std::vector<std::uint64_t> hist(n + 1, 0);
    if (begin == end) return hist;
    // Start at the Gray codeword of `begin`, then one row XOR per step.
    const std::uint64_t gray = begin ^ (begin >> 1);
    BitVector word(n);
    for (std::size_t j = 0; j < k; ++j) {
      if ((gray >> j) & 1U) word ^= generator.row(j);
    }
    ++hist[word.weight()];
    for (std::uint64_t i = begin + 1; i < end; ++i) {
      word ^= generator.row(static_cast<std::size_t>(std::countr_zero(i)));
      ++hist[word.weight()];
    }
    return hist;
  });

  std::vector<std::uint64_t> counts(n + 1, 0);
  for (const auto& part : parts) {
    for (std::size_t w = 0; w < part.size(); ++w) counts[w] += part[w];
  }
  return counts;
}

WeightDistribution enumerate_weights(unsigned m, unsigned r, std::uint64_t budget) {
  const std::size_t k = dimension(m, r);
  if (k >= 63 || (std::uint64_t{1} << k) > budget) throw BudgetExceeded("2^k codewords exceed the enumeration budget");
  return {m, r, enumerate_weights(eval_matrix(m, r), budget)};
}

std::uint64_t cumulative_weight(const WeightDistribution& dist, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::invalid_argument("alpha must lie in [0,1]");
  const double limit = alpha * static_cast<double>(dist.n());
  std::uint64_t sum = 0;
  for (std::size_t w = 0; w < dist.counts.size() && static_cast<double>(w) <= limit; ++w) sum += dist.counts[w];
  return sum;
}

BigInt big_binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt c = 1;
  for (std::uint64_t i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

namespace {

BigInt big_binom_sum(std::uint64_t m, std::uint64_t r) {
  BigInt total = 0;
  for (std::uint64_t i = 0; i <= std::min(m, r); ++i) total += big_binom(m, i);
  return total;
}

}  // namespace

KlpExponent klp_bound(unsigned m, unsigned r, unsigned ell, double eps, double c) {
  if (ell < 1 || ell + 1 > r) throw std::domain_error("klp_bound requires 1 <= ell <= r-1");
  if (4 * (r - 1) >= m) throw std::domain_error("klp_bound requires r-1 < m/4");
  if (!(eps > 0.0 && eps <= 0.5)) throw std::domain_error("klp_bound requires 0 < eps <= 1/2");
  if (!(c > 0.0)) throw std::domain_error("klp_bound requires c > 0");
  KlpExponent out;
  const BigInt ell4 = BigInt(ell) * ell * ell * ell;
  out.coefficient = 8 * ell4 * big_binom_sum(m - ell, r - ell);
  out.c = c;
  out.log2_inv_eps = -std::log2(eps);
  return out;
}

double klp_minimal_constant(const WeightDistribution& dist, unsigned ell, double eps) {
  const KlpExponent unit = klp_bound(dist.m, dist.r, ell, eps, 1.0);
  const double alpha = (1.0 - eps) * std::ldexp(1.0, -static_cast<int>(ell));
  const std::uint64_t w = cumulative_weight(dist, alpha);
  return std::log2(static_cast<double>(w)) / unit.log2_bound();
}

BigRational bsc_union_bound(const WeightDistribution& dist, std::size_t s) {
  const std::size_t n = dist.n();
  if (2 * s > n) throw std::invalid_argument("bsc_union_bound requires s <= n/2");
  const std::size_t d = dist.min_nonzero_weight();
  if (d == 0) return 0;
  // Even weights from d up to n. Weights in (n-d, n) carry no codewords in a
  // code containing the all-ones word; w = n only contributes when s = n/2.
  BigInt numerator = 0;
  for (std::size_t w = d; w <= n; ++w) {
    if (w % 2 != 0 || dist.counts[w] == 0 || w / 2 > s) continue;
    numerator += BigInt(dist.counts[w]) * big_binom(w, w / 2) * big_binom(n - w, s - w / 2);
  }
  return BigRational(numerator, big_binom(n, s));
}

WeiRepresentation wei_rep(std::uint64_t a, unsigned m, unsigned r) {
  if (r > m) throw std::invalid_argument("r must not exceed m");
  if (WideCount(a) > binom_sum(m, r)) throw std::out_of_range("a exceeds the code dimension");
  WeiRepresentation rep;
  std::uint64_t remaining = a;
  int gap = static_cast<int>(m) - static_cast<int>(r);
  int upper = static_cast<int>(m);
  while (remaining > 0) {
    // Largest m_i <= upper with C(m_i, <= m_i - gap) <= remaining; r_i >= 0.
    const int lowest = std::max(gap, 0);
    int chosen = -1;
    for (int mi = upper; mi >= lowest; --mi) {
      const auto ri = static_cast<unsigned>(mi - gap);
      if (binom_sum(static_cast<unsigned>(mi), ri) <= remaining) {
        chosen = mi;
        break;
      }
    }
    if (chosen < 0) throw std::logic_error("wei_rep: no admissible term");
    const auto ri = static_cast<unsigned>(chosen - gap);
    rep.terms.emplace_back(static_cast<unsigned>(chosen), ri);
    remaining -= static_cast<std::uint64_t>(binom_sum(static_cast<unsigned>(chosen), ri));
    upper = chosen - 1;
    --gap;
  }
  return rep;
}

std::uint64_t ghw(unsigned m, unsigned r, std::uint64_t a) {
  if (a == 0) throw std::out_of_range("ghw requires a >= 1");
  std::uint64_t d = 0;
  for (const auto& [mi, ri] : wei_rep(a, m, r).terms) d += std::uint64_t{1} << mi;
  return d;
}

GhwTable ghw_table(unsigned m, unsigned r) {
  GhwTable table{m, r, {}};
  const std::size_t k = dimension(m, r);
  table.d.reserve(k);
  for (std::uint64_t a = 1; a <= k; ++a) table.d.push_back(ghw(m, r, a));
  return table;
}

WideCount gaussian_binomial(unsigned k, unsigned a) {
  if (a > k) return 0;
  if (k >= 127) throw std::overflow_error("gaussian_binomial: k too large");
  BigInt num = 1;
  BigInt den = 1;
  for (unsigned i = 0; i < a; ++i) {
    num *= (BigInt(1) << (k - i)) - 1;
    den *= (BigInt(1) << (i + 1)) - 1;
  }
  const BigInt q = num / den;
  if (q > BigInt(std::numeric_limits<WideCount>::max())) throw std::overflow_error("gaussian_binomial overflow");
  return static_cast<WideCount>(q);
}

std::uint64_t ghw_bruteforce(unsigned m, unsigned r, unsigned a, std::uint64_t budget) {
  const std::size_t k = dimension(m, r);
  if (a < 1 || a > k) throw std::out_of_range("ghw_bruteforce requires 1 <= a <= k");
  if (gaussian_binomial(static_cast<unsigned>(k), a) > budget) {
    throw BudgetExceeded("number of subcodes exceeds the brute-force budget");
  }
  const BitMatrix g = eval_matrix(m, r);
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();

  // Each subspace of the message space has exactly one RREF basis: choose
  // the pivot columns, then every assignment of the free entries.
  for_each_combination(k, a, [&](const std::vector<std::size_t>& pivots) {
    std::vector<std::pair<std::size_t, std::size_t>> free_entries;  // (basis row, message column)
    for (std::size_t i = 0; i < a; ++i) {
      for (std::size_t j = pivots[i] + 1; j < k; ++j) {
        if (!std::binary_search(pivots.begin(), pivots.end(), j)) free_entries.emplace_back(i, j);
      }
    }
    std::vector<BitVector> basis;
    basis.reserve(a);
    for (std::size_t p : pivots) basis.push_back(g.row(p));
    BitVector support(g.cols());
    auto measure = [&] {
      support.clear();
      for (const auto& b : basis) support |= b;
      best = std::min<std::uint64_t>(best, support.weight());
    };
    measure();
    const std::uint64_t count = std::uint64_t{1} << free_entries.size();
    for (std::uint64_t i = 1; i < count; ++i) {
      const auto& [row, col] = free_entries[static_cast<std::size_t>(std::countr_zero(i))];
      basis[row] ^= g.row(col);
      measure();
    }
    return true;
  });
  return best;
}

bool binomial_identity_check(unsigned m, unsigned r, unsigned t) {
  if (r < 1) throw std::domain_error("binomial identity requires r >= 1");
  if (t > m) throw std::domain_error("binomial identity requires t <= m");
  BigInt lhs = big_binom_sum(m, r);
  for (unsigned i = 1; i <= t; ++i) lhs -= big_binom_sum(m - i, r - 1);
  return lhs == big_binom_sum(m - t, r);
}

EstimationCheck estimation_small_r_check(unsigned m, unsigned r, double delta, double eps) {
  if (m < 2) throw std::domain_error("estimation check requires m >= 2");
  if (!(delta > 0.0 && delta < 1.0)) throw std::domain_error("delta must lie in (0,1)");
  if (!(eps > 0.0 && eps <= 1.0)) throw std::domain_error("eps must lie in (0,1]");
  EstimationCheck out;
  const double log_m = std::log2(static_cast<double>(m));
  out.hypotheses_hold = static_cast<double>(r) < std::sqrt(delta * m / (4.0 * log_m)) &&
                        eps > std::pow(static_cast<double>(m), -static_cast<double>(r) / 2.0);
  const BigInt full = big_binom_sum(m, r);
  const double log_full = std::log2(full.convert_to<double>());
  out.reduced_m = static_cast<std::int64_t>(std::floor(static_cast<double>(m) - log_full + std::log2(eps)));
  const BigInt reduced = out.reduced_m < 0 ? BigInt(0) : big_binom_sum(static_cast<std::uint64_t>(out.reduced_m), r);
  out.lhs = reduced.convert_to<double>();
  out.rhs = (1.0 - delta) * full.convert_to<double>();
  out.inequality_holds = out.lhs > out.rhs;
  return out;
}

}  // namespace rmlab
