#include "rmlab/error_patterns.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "rmlab/combinatorics.hpp"
#include "rmlab/parallel.hpp"
#include "rmlab/rng.hpp"

namespace rmlab {

namespace {

constexpr std::size_t kMaxViolationExamples = 10;
constexpr std::uint64_t kReductionSamples = 100000;

Point point_mask(unsigned m) { return m >= 64 ? ~Point{0} : (Point{1} << m) - 1; }

void require_points_fit(const PointMatrix& u) {
  if (u.m > kMaxVariables) throw std::invalid_argument("point dimension too large");
  for (Point p : u.columns) {
    if ((p & ~point_mask(u.m)) != 0) throw std::out_of_range("point has bits beyond m");
  }
}

// Precomputed state for repeated collision searches against one matrix.
class CollisionSearcher {
 public:
  CollisionSearcher(const BitMatrix& h, std::uint64_t budget)
      : h_(h), budget_(budget), kernel_(kernel_basis(h)), kernel_dim_(kernel_.rows()) {
    const BitMatrix ht = transpose(h);
    columns_ = ht.row_vectors();
  }

  std::optional<Pattern> find(const Pattern& u) const {
    if (u.n() != h_.cols()) throw std::invalid_argument("pattern length differs from parity-check column count");
    const std::size_t s = u.weight();
    if (s == 0) return std::nullopt;
    const WideCount kernel_cost = kernel_dim_ >= 100 ? WideCount(~WideCount(0)) : WideCount(1) << kernel_dim_;
    WideCount pattern_cost = 0;
    for (std::size_t i = 0; i <= s; ++i) {
      pattern_cost += binom(static_cast<unsigned>(h_.cols()), static_cast<unsigned>(i));
    }
    if (kernel_cost > budget_ && pattern_cost > budget_) {
      throw BudgetExceeded("syndrome collision search exceeds budget on both the kernel and the pattern side");
    }
    return kernel_cost <= pattern_cost ? by_kernel(u) : by_patterns(u);
  }

 private:
  std::optional<Pattern> by_kernel(const Pattern& u) const {
    const std::size_t s = u.weight();
    BitVector w = u.indicator();
    const std::uint64_t count = std::uint64_t{1} << kernel_dim_;
    // w = 1_U + c walks all codewords c in Gray-code order.
    for (std::uint64_t i = 1; i < count; ++i) {
      w ^= kernel_.row(static_cast<std::size_t>(std::countr_zero(i)));
      if (w.weight() <= s) return Pattern::from_indicator(w);
    }
    return std::nullopt;
  }

  std::optional<Pattern> by_patterns(const Pattern& u) const {
    const std::size_t n = h_.cols();
    const std::size_t s = u.weight();
    BitVector target(h_.rows());
    for (std::size_t i : u.support()) target ^= columns_[i];

    std::vector<std::size_t> chosen;
    std::vector<BitVector> partial{BitVector(h_.rows())};
    std::optional<Pattern> found;
    // Depth-first over subsets in lexicographic order, running syndromes on a stack.
    auto visit = [&](auto&& self, std::size_t start) -> bool {
      if (partial.back() == target && chosen != u.support()) {
        found = Pattern(n, chosen);
        return true;
      }
      if (chosen.size() == s) return false;
      for (std::size_t j = start; j < n; ++j) {
        chosen.push_back(j);
        partial.push_back(partial.back() ^ columns_[j]);
        const bool hit = self(self, j + 1);
        partial.pop_back();
        chosen.pop_back();
        if (hit) return true;
      }
      return false;
    };
    visit(visit, 0);
    return found;
  }

  const BitMatrix& h_;  // must outlive the searcher
  std::uint64_t budget_;
  BitMatrix kernel_;
  std::size_t kernel_dim_;
  std::vector<BitVector> columns_;
};

}  // namespace

PointMatrix PointMatrix::from_pattern(const Pattern& pattern, unsigned m) {
  if (pattern.n() != (std::size_t{1} << m)) throw std::invalid_argument("pattern must live on 2^m coordinates");
  return {m, pattern.points()};
}

PointMatrix PointMatrix::from_matrix(const BitMatrix& matrix) {
  if (matrix.rows() > kMaxVariables) throw std::invalid_argument("point dimension too large");
  PointMatrix out{static_cast<unsigned>(matrix.rows()), std::vector<Point>(matrix.cols(), 0)};
  for (std::size_t i = 0; i < matrix.rows(); ++i) {
    const BitVector& row = matrix.row(i);
    for (std::size_t j = row.next_set(0); j < row.size(); j = row.next_set(j + 1)) out.columns[j] |= Point{1} << i;
  }
  return out;
}

BitMatrix PointMatrix::to_matrix() const {
  BitMatrix out(m, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    for (unsigned i = 0; i < m; ++i) {
      if ((columns[j] >> i) & 1U) out.set(i, j);
    }
  }
  return out;
}

std::optional<Pattern> PointMatrix::to_pattern() const {
  std::vector<std::size_t> idx(columns.begin(), columns.end());
  std::sort(idx.begin(), idx.end());
  if (std::adjacent_find(idx.begin(), idx.end()) != idx.end()) return std::nullopt;
  return Pattern(std::size_t{1} << m, std::move(idx));
}

Pattern PointMatrix::odd_support() const {
  std::vector<std::size_t> idx(columns.begin(), columns.end());
  std::sort(idx.begin(), idx.end());
  std::vector<std::size_t> odd;
  for (std::size_t i = 0; i < idx.size();) {
    std::size_t j = i;
    while (j < idx.size() && idx[j] == idx[i]) ++j;
    if ((j - i) % 2 == 1) odd.push_back(idx[i]);
    i = j;
  }
  return Pattern(std::size_t{1} << m, std::move(odd));
}

Syndrome syndrome(const BitMatrix& h, const Pattern& z) {
  if (z.n() != h.cols()) throw std::invalid_argument("pattern length differs from parity-check column count");
  BitVector acc(h.rows());
  for (std::size_t r = 0; r < h.rows(); ++r) {
    bool bit = false;
    for (std::size_t i : z.support()) bit ^= h.get(r, i);
    if (bit) acc.set(r);
  }
  return {std::move(acc), std::nullopt};
}

Syndrome eval_syndrome(const PointMatrix& u, unsigned r) {
  require_points_fit(u);
  const auto monos = monomials(u.m, std::min(r, u.m));
  BitVector acc(monos.size());
  for (Point p : u.columns) {
    for (std::size_t i = 0; i < monos.size(); ++i) {
      if (monos[i].evaluate(p)) acc.flip(i);
    }
  }
  return {std::move(acc), std::make_pair(u.m, std::min(r, u.m))};
}

bool patterns_equiv(const PointMatrix& u, const PointMatrix& v, unsigned r) {
  if (u.m != v.m) throw std::invalid_argument("patterns_equiv: point dimensions differ");
  return eval_syndrome(u, r).value == eval_syndrome(v, r).value;
}

bool patterns_equiv_combinatorial(const PointMatrix& u, const PointMatrix& v, unsigned r) {
  if (u.m != v.m) throw std::invalid_argument("patterns_equiv: point dimensions differ");
  require_points_fit(u);
  require_points_fit(v);
  const unsigned m = u.m;
  // Restricted columns that occur an odd number of times, sorted.
  auto odd_restrictions = [](const PointMatrix& w, Point rows) {
    std::vector<Point> keys;
    keys.reserve(w.columns.size());
    for (Point p : w.columns) keys.push_back(p & rows);
    std::sort(keys.begin(), keys.end());
    std::vector<Point> odd;
    for (std::size_t i = 0; i < keys.size();) {
      std::size_t j = i;
      while (j < keys.size() && keys[j] == keys[i]) ++j;
      if ((j - i) % 2 == 1) odd.push_back(keys[i]);
      i = j;
    }
    return odd;
  };
  for (const Monomial& rows : monomials(m, std::min(r, m))) {
    if (odd_restrictions(u, rows.vars) != odd_restrictions(v, rows.vars)) return false;
  }
  return true;
}

PointMatrix affine_transform(const PointMatrix& u, const BitMatrix& t) {
  if (t.rows() != u.m || t.cols() != u.m) throw std::invalid_argument("transform must be m x m");
  require_points_fit(u);
  std::vector<Point> row_masks(u.m, 0);
  for (unsigned i = 0; i < u.m; ++i) {
    for (unsigned j = 0; j < u.m; ++j) {
      if (t.get(i, j)) row_masks[i] |= Point{1} << j;
    }
  }
  PointMatrix out{u.m, {}};
  out.columns.reserve(u.columns.size());
  for (Point p : u.columns) {
    Point image = 0;
    for (unsigned i = 0; i < u.m; ++i) {
      if (std::popcount(row_masks[i] & p) & 1) image |= Point{1} << i;
    }
    out.columns.push_back(image);
  }
  return out;
}

std::optional<Pattern> find_syndrome_collision(const BitMatrix& h, const Pattern& u, std::uint64_t budget) {
  CollisionSearcher searcher(h, budget);
  return searcher.find(u);
}

bool unique_error_decodable(const BitMatrix& h, const Pattern& u, std::uint64_t budget) {
  return !find_syndrome_collision(h, u, budget).has_value();
}

BitMatrix companion_matrix(std::size_t s) {
  if (s < 4 || s % 2 != 0) throw std::invalid_argument("companion matrix needs an even size of at least 4");
  BitMatrix b(s, s);
  for (std::size_t i = 0; i + 2 < s; ++i) {
    b.set(i, 0);
    b.set(i, 1);
    b.set(i, i + 2);
  }
  b.set(s - 2, 0);
  for (std::size_t j = 2; j < s; ++j) b.set(s - 2, j);
  for (std::size_t j = 1; j < s; ++j) b.set(s - 1, j);
  return b;
}

PointMatrix companion_ub(const PointMatrix& u) {
  const BitMatrix b = companion_matrix(u.columns.size());
  PointMatrix v{u.m, std::vector<Point>(u.columns.size(), 0)};
  for (std::size_t i = 0; i < u.columns.size(); ++i) {
    for (std::size_t j = 0; j < u.columns.size(); ++j) {
      if (b.get(i, j)) v.columns[j] ^= u.columns[i];
    }
  }
  return v;
}

namespace {

// Shared driver: enumerate all subsets of [n] with weight <= max_weight (or
// sample them when there are too many), filter with `independent`, and test
// each survivor with `decodable`.
template <class Independent, class Decodable>
ReductionReport run_reduction(std::size_t n, std::size_t max_weight, std::uint64_t budget, std::uint64_t seed,
                              Independent independent, Decodable decodable) {
  WideCount space = 0;
  for (std::size_t i = 0; i <= std::min(max_weight, n); ++i) {
    space += binom(static_cast<unsigned>(n), static_cast<unsigned>(i));
  }

  auto examine = [&](ReductionReport& report, const std::vector<std::size_t>& subset) {
    ++report.examined;
    Pattern u(n, subset);
    if (!independent(u)) {
      ++report.skipped_dependent;
      return;
    }
    ++report.checked;
    if (!decodable(u)) {
      ++report.violations;
      if (report.violation_examples.size() < kMaxViolationExamples) report.violation_examples.push_back(std::move(u));
    }
  };

  auto merge = [](std::vector<ReductionReport> parts) {
    ReductionReport total;
    for (auto& p : parts) {
      total.examined += p.examined;
      total.skipped_dependent += p.skipped_dependent;
      total.checked += p.checked;
      total.violations += p.violations;
      for (auto& ex : p.violation_examples) {
        if (total.violation_examples.size() < kMaxViolationExamples) total.violation_examples.push_back(std::move(ex));
      }
    }
    return total;
  };

  if (space <= budget) {
    // Partitioned by the smallest element of the subset; chunk 0 also owns the empty set.
    auto parts = parallel_map_chunks<ReductionReport>(n, [&](std::uint64_t begin, std::uint64_t end) {
      ReductionReport report;
      if (begin == 0) examine(report, {});
      std::vector<std::size_t> subset;
      for (std::uint64_t first = begin; first < end; ++first) {
        const std::size_t rest = n - static_cast<std::size_t>(first) - 1;
        for (std::size_t extra = 0; extra + 1 <= max_weight; ++extra) {
          for_each_combination(rest, extra, [&](const std::vector<std::size_t>& idx) {
            subset.assign(1, static_cast<std::size_t>(first));
            for (std::size_t i : idx) subset.push_back(static_cast<std::size_t>(first) + 1 + i);
            examine(report, subset);
            return true;
          });
        }
      }
      return report;
    });
    return merge(std::move(parts));
  }

  // Sampling: weight drawn proportionally to C(n, w), then a uniform subset.
  std::vector<double> weights;
  for (std::size_t i = 0; i <= std::min(max_weight, n); ++i) {
    weights.push_back(static_cast<double>(binom(static_cast<unsigned>(n), static_cast<unsigned>(i))));
  }
  const std::uint64_t samples = std::min<std::uint64_t>(budget, kReductionSamples);
  auto parts = parallel_map_chunks<ReductionReport>(samples, [&](std::uint64_t begin, std::uint64_t end) {
    ReductionReport report;
    for (std::uint64_t t = begin; t < end; ++t) {
      Rng rng = substream(seed, t);
      std::discrete_distribution<std::size_t> pick_weight(weights.begin(), weights.end());
      const std::size_t w = pick_weight(rng);
      examine(report, sample_pattern(CorruptionModel::uniform(static_cast<double>(w)), n, rng).support());
    }
    return report;
  });
  ReductionReport report = merge(std::move(parts));
  report.sampled = true;
  return report;
}

}  // namespace

ReductionReport check_erasures_to_errors(unsigned m, unsigned r, std::size_t max_weight, std::uint64_t budget,
                                         std::uint64_t seed) {
  if (r > m) throw std::invalid_argument("r must not exceed m");
  const std::size_t n = std::size_t{1} << m;
  const BitMatrix erasure_view = eval_matrix(m, r);
  const BitMatrix error_check = eval_matrix(m, std::min(2 * r + 1, m));
  return run_reduction(
      n, max_weight, budget, seed,
      [&](const Pattern& u) {
        return u.weight() <= erasure_view.rows() && rank(select_columns(erasure_view, u.support())) == u.weight();
      },
      [searcher = CollisionSearcher(error_check, budget)](const Pattern& u) { return !searcher.find(u).has_value(); });
}

ReductionReport check_general_reduction(const BitMatrix& h, std::size_t max_weight, std::uint64_t budget,
                                        std::uint64_t seed) {
  const BitMatrix tensored = tensor_power(h, 3);
  return run_reduction(
      h.cols(), max_weight, budget, seed,
      [&](const Pattern& s) { return s.weight() <= h.rows() && rank(select_columns(h, s.support())) == s.weight(); },
      [searcher = CollisionSearcher(tensored, budget)](const Pattern& s) { return !searcher.find(s).has_value(); });
}

MlResult ml_decode(const BitMatrix& generator, const BitVector& received, std::uint64_t budget) {
  if (received.size() != generator.cols()) throw std::invalid_argument("received word has the wrong length");
  const std::size_t k = generator.rows();
  if (k >= 63 || (std::uint64_t{1} << k) > budget) throw BudgetExceeded("2^k codewords exceed the ML budget");
  const std::uint64_t count = std::uint64_t{1} << k;
  BitVector diff = received;
  std::size_t best = diff.weight();
  std::uint64_t best_index = 0;
  std::uint64_t ties = 1;
  for (std::uint64_t i = 1; i < count; ++i) {
    diff ^= generator.row(static_cast<std::size_t>(std::countr_zero(i)));
    const std::size_t w = diff.weight();
    if (w < best) {
      best = w;
      best_index = i ^ (i >> 1);
      ties = 1;
    } else if (w == best) {
      ++ties;
    }
  }
  BitVector message(k);
  for (std::size_t j = 0; j < k; ++j) {
    if ((best_index >> j) & 1U) message.set(j);
  }
  return {ties == 1, vec_mat(message, generator), best};
}

MlResult ml_decode(const RmCode& code, const BitVector& received, std::uint64_t budget) {
  if (code.k() >= 63 || (std::uint64_t{1} << code.k()) > budget) throw BudgetExceeded("2^k codewords exceed the ML budget");
  return ml_decode(code.generator(), received, budget);
}

BscMethod parse_bsc_method(const std::string& text) {
  if (text == "syndrome") return BscMethod::SyndromeCollision;
  if (text == "ml") return BscMethod::FullMl;
  throw std::invalid_argument("method must be 'syndrome' or 'ml'");
}

std::string to_string(BscMethod method) { return method == BscMethod::SyndromeCollision ? "syndrome" : "ml"; }

McEstimate mc_bsc_success(const RmCode& code, const CorruptionModel& model, std::uint64_t trials, std::uint64_t seed,
                          BscMethod method, std::uint64_t budget) {
  if (trials == 0) throw std::invalid_argument("trials must be at least 1");
  model.validate(code.n());
  const std::size_t n = code.n();
  std::uint64_t successes = 0;
  if (method == BscMethod::SyndromeCollision) {
    const BitMatrix h = code.parity_check();
    successes = parallel_sum(trials, [&](std::uint64_t begin, std::uint64_t end) {
      CollisionSearcher searcher(h, budget);
      std::uint64_t ok = 0;
      for (std::uint64_t t = begin; t < end; ++t) {
        Rng rng = substream(seed, t);
        if (!searcher.find(sample_pattern(model, n, rng)).has_value()) ++ok;
      }
      return ok;
    });
  } else {
    if (code.k() >= 63 || (std::uint64_t{1} << code.k()) > budget) {
      throw BudgetExceeded("2^k codewords exceed the ML budget");
    }
    const BitMatrix g = code.generator();
    successes = parallel_sum(trials, [&](std::uint64_t begin, std::uint64_t end) {
      std::uint64_t ok = 0;
      for (std::uint64_t t = begin; t < end; ++t) {
        Rng rng = substream(seed, t);
        // Pattern first so both methods see the same pattern for a given trial.
        const Pattern e = sample_pattern(model, n, rng);
        const BitVector sent = vec_mat(BitVector::random(g.rows(), rng), g);
        const MlResult decoded = ml_decode(g, sent ^ e.indicator(), budget);
        if (decoded.unique && decoded.codeword == sent) ++ok;
      }
      return ok;
    });
  }
  return {trials, successes};
}

ExactFraction exact_bsc_success(const BitMatrix& h, std::size_t s, std::uint64_t budget) {
  const std::size_t n = h.cols();
  if (s > n) throw std::invalid_argument("pattern weight exceeds blocklength");
  if (binom(static_cast<unsigned>(n), static_cast<unsigned>(s)) > budget) {
    throw BudgetExceeded("too many patterns for exhaustive enumeration");
  }
  CollisionSearcher searcher(h, budget);
  ExactFraction out;
  for_each_combination(n, s, [&](const std::vector<std::size_t>& idx) {
    ++out.total;
    if (!searcher.find(Pattern(n, idx)).has_value()) ++out.good;
    return true;
  });
  return out;
}

ExactFraction exact_bsc_success(const RmCode& code, std::size_t s, std::uint64_t budget) {
  return exact_bsc_success(code.parity_check(), s, budget);
}

}  // namespace rmlab
