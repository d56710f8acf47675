#include "rmlab/erasure.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "rmlab/combinatorics.hpp"
#include "rmlab/parallel.hpp"
#include "rmlab/rng.hpp"

namespace rmlab {

ErasedWord::ErasedWord(const BitVector& word, Pattern erased) : erased_(std::move(erased)), values_(word) {
  if (erased_.n() != word.size()) throw std::invalid_argument("erasure pattern length differs from word length");
  for (std::size_t i : erased_.support()) values_.set(i, false);
}

bool erasure_correctable(const BitMatrix& h, const Pattern& s) {
  if (s.n() != h.cols()) throw std::invalid_argument("pattern length differs from parity-check column count");
  if (s.weight() > h.rows()) return false;
  return rank(select_columns(h, s.support())) == s.weight();
}

bool generator_recovers(const BitMatrix& g, const Pattern& s) {
  if (s.n() != g.cols()) throw std::invalid_argument("pattern length differs from generator column count");
  return rank(select_columns(g, s.complement().support())) == rank(g);
}

ErasureDecodeResult decode_erasures(const BitMatrix& h, const ErasedWord& word) {
  if (word.n() != h.cols()) throw std::invalid_argument("word length differs from parity-check column count");
  const auto& erased = word.erased().support();
  const BitVector rhs = mat_vec(h, word.values());
  const BitMatrix unknowns = select_columns(h, erased);
  const auto solution = solve_any(unknowns, rhs);
  if (!solution) return {ErasureDecodeResult::Status::Inconsistent, std::nullopt};
  BitVector completed = word.values();
  for (std::size_t j = 0; j < erased.size(); ++j) {
    if (solution->get(j)) completed.set(erased[j]);
  }
  const auto status = rank(unknowns) == erased.size() ? ErasureDecodeResult::Status::Unique
                                                      : ErasureDecodeResult::Status::Ambiguous;
  return {status, std::move(completed)};
}

std::pair<bool, bool> dual_rank_equivalence(unsigned m, unsigned d, const Pattern& s) {
  if (d + 1 > m) throw std::invalid_argument("dual_rank_equivalence requires d <= m-1");
  const std::size_t n = std::size_t{1} << m;
  if (s.n() != n) throw std::invalid_argument("pattern must live on 2^m coordinates");
  const BitMatrix primal = eval_matrix(m, d);
  const BitMatrix dual = eval_matrix(m, m - d - 1);
  const bool column_rank = rank(select_columns(primal, s.support())) == s.weight();
  const bool row_rank = rank(select_columns(dual, s.complement().support())) == n - dimension(m, d);
  return {column_rank, row_rank};
}

McEstimate mc_erasure_success(const RmCode& code, const CorruptionModel& model, std::uint64_t trials,
                              std::uint64_t seed, std::uint64_t max_n) {
  if (trials == 0) throw std::invalid_argument("trials must be at least 1");
  if (code.n() > max_n) throw BudgetExceeded("blocklength exceeds the Monte-Carlo budget");
  model.validate(code.n());
  const BitMatrix h = code.parity_check();
  const std::uint64_t successes = parallel_sum(trials, [&](std::uint64_t begin, std::uint64_t end) {
    std::uint64_t ok = 0;
    for (std::uint64_t t = begin; t < end; ++t) {
      Rng rng = substream(seed, t);
      if (erasure_correctable(h, sample_pattern(model, code.n(), rng))) ++ok;
    }
    return ok;
  });
  return {trials, successes};
}

ExactFraction exact_erasure_success(const RmCode& code, std::size_t s, std::uint64_t budget) {
  if (s > code.n()) throw std::invalid_argument("pattern weight exceeds blocklength");
  const WideCount total = binom(static_cast<unsigned>(code.n()), static_cast<unsigned>(s));
  if (total > budget) throw BudgetExceeded("too many patterns for exhaustive enumeration");
  const BitMatrix h = code.parity_check();
  ExactFraction out;
  for_each_combination(code.n(), s, [&](const std::vector<std::size_t>& idx) {
    ++out.total;
    if (erasure_correctable(h, Pattern(code.n(), idx))) ++out.good;
    return true;
  });
  return out;
}

double exact_erasure_success_iid(const RmCode& code, double p, std::uint64_t budget) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0,1]");
  if (code.n() >= 64 || (std::uint64_t{1} << code.n()) > budget) {
    throw BudgetExceeded("too many patterns for exhaustive enumeration");
  }
  double total = 0.0;
  for (std::size_t s = 0; s <= code.n(); ++s) {
    const double count = static_cast<double>(binom(static_cast<unsigned>(code.n()), static_cast<unsigned>(s)));
    const double mass = count * std::pow(p, static_cast<double>(s)) * std::pow(1.0 - p, static_cast<double>(code.n() - s));
    if (mass == 0.0) continue;
    total += mass * exact_erasure_success(code, s, budget).value();
  }
  return total;
}

namespace {

bool spans(const std::vector<BitVector>& table, const std::vector<Point>& points, std::size_t k) {
  if (points.size() < k) return false;
  std::vector<BitVector> rows;
  rows.reserve(points.size());
  for (Point p : points) rows.push_back(table[p]);
  return rank(BitMatrix::from_rows(std::move(rows), k)) == k;
}

std::vector<BitVector> eval_table(unsigned m, unsigned r) {
  if (m > 20) throw BudgetExceeded("point table too large");
  const BitMatrix e = eval_matrix(m, r);
  std::vector<BitVector> table;
  table.reserve(e.cols());
  const BitMatrix et = transpose(e);
  for (std::size_t j = 0; j < et.rows(); ++j) table.push_back(et.row(j));
  return table;
}

}  // namespace

McEstimate mc_span_success(unsigned m, unsigned r, std::size_t s, std::uint64_t trials, std::uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("trials must be at least 1");
  const std::size_t k = dimension(m, r);
  if (s < k) return {trials, 0};
  const auto table = eval_table(m, r);
  const std::uint64_t successes = parallel_sum(trials, [&](std::uint64_t begin, std::uint64_t end) {
    std::uint64_t ok = 0;
    for (std::uint64_t t = begin; t < end; ++t) {
      Rng rng = substream(seed, t);
      if (spans(table, sample_points_iid(m, s, rng), k)) ++ok;
    }
    return ok;
  });
  return {trials, successes};
}

double exact_span_probability(unsigned m, unsigned r, std::size_t s, std::uint64_t budget) {
  const std::size_t k = dimension(m, r);
  if (s < k) return 0.0;
  const WideCount tuples = WideCount(1) << (m * s);
  if (m * s >= 64 || tuples > budget) throw BudgetExceeded("too many point tuples for exhaustive enumeration");
  const auto table = eval_table(m, r);
  const std::uint64_t total = static_cast<std::uint64_t>(tuples);
  const std::uint64_t mask = (std::uint64_t{1} << m) - 1;
  std::uint64_t good = 0;
  std::vector<Point> points(s);
  for (std::uint64_t code = 0; code < total; ++code) {
    for (std::size_t i = 0; i < s; ++i) points[i] = (code >> (i * m)) & mask;
    if (spans(table, points, k)) ++good;
  }
  return static_cast<double>(good) / static_cast<double>(total);
}

double affine_span_probability(unsigned m, std::size_t s) {
  if (s == 0) return 0.0;
  // dist[j]: probability that the affine span of the points so far has dimension j.
  std::vector<double> dist(m + 1, 0.0);
  dist[0] = 1.0;
  for (std::size_t step = 1; step < s; ++step) {
    std::vector<double> next(m + 1, 0.0);
    for (unsigned j = 0; j <= m; ++j) {
      const double stay = std::ldexp(1.0, static_cast<int>(j) - static_cast<int>(m));
      next[j] += dist[j] * stay;
      if (j < m) next[j + 1] += dist[j] * (1.0 - stay);
    }
    dist = std::move(next);
  }
  return dist[m];
}

}  // namespace rmlab
