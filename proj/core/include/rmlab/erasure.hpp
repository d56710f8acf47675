#pragma once

// Erasure correction through rank conditions, erasure decoding by linear
// solve, and exact / Monte-Carlo estimates of erasure-correction probability.

#include <cstdint>
#include <optional>
#include <utility>

#include "rmlab/channel.hpp"
#include "rmlab/common.hpp"
#include "rmlab/estimate.hpp"
#include "rmlab/gf2.hpp"
#include "rmlab/rm.hpp"

namespace rmlab {

/// A received word with some coordinates lost. Values on erased positions
/// are stored as zero and never read.
class ErasedWord {
 public:
  ErasedWord(const BitVector& word, Pattern erased);

  std::size_t n() const { return values_.size(); }
  const Pattern& erased() const { return erased_; }
  const BitVector& values() const { return values_; }

 private:
  Pattern erased_;
  BitVector values_;
};

struct ErasureDecodeResult {
  enum class Status { Unique, Ambiguous, Inconsistent };

  Status status = Status::Inconsistent;
  /// The completed codeword when Unique; one valid completion when Ambiguous.
  std::optional<BitVector> codeword;
};

/// ker(h) can recover any codeword erased on `s`: rank(h[S]) = |S|.
bool erasure_correctable(const BitMatrix& h, const Pattern& s);

/// Generator-side criterion: the coordinates outside `s` still determine the
/// message, i.e. rank(g[S^c]) = rank(g) for a k x n generator g.
bool generator_recovers(const BitMatrix& g, const Pattern& s);

/// Solves h*x = 0 with x fixed on the known coordinates. Unknowns are the
/// erased coordinates only.
ErasureDecodeResult decode_erasures(const BitMatrix& h, const ErasedWord& word);

/// (rank(E(m,d)[S]) = |S|, rank(E(m,m-d-1)[S^c]) = n - C(m,<=d)).
/// The two components always agree.
std::pair<bool, bool> dual_rank_equivalence(unsigned m, unsigned d, const Pattern& s);

/// Fraction of sampled patterns the code recovers from, using parity_check(code).
McEstimate mc_erasure_success(const RmCode& code, const CorruptionModel& model, std::uint64_t trials,
                              std::uint64_t seed, std::uint64_t max_n = std::uint64_t{1} << 16);

/// Exact fraction of weight-s patterns the code recovers from, by enumerating
/// all C(n, s) patterns.
ExactFraction exact_erasure_success(const RmCode& code, std::size_t s, std::uint64_t budget = kDefaultBudget);

/// Exact success probability under i.i.d. erasures with probability p:
/// sum over s of Binomial(n, p)(s) * exact_erasure_success(code, s).
double exact_erasure_success_iid(const RmCode& code, double p, std::uint64_t budget = kDefaultBudget);

/// Fraction of trials in which s i.i.d. uniform points have evaluation
/// vectors spanning F_2^{C(m,<=r)}.
McEstimate mc_span_success(unsigned m, unsigned r, std::size_t s, std::uint64_t trials, std::uint64_t seed);

/// Exact spanning probability by enumerating all (2^m)^s point tuples.
double exact_span_probability(unsigned m, unsigned r, std::size_t s, std::uint64_t budget = kDefaultBudget);

/// Exact spanning probability for r = 1: the points must affinely span
/// F_2^m. A new point raises the affine dimension j with probability
/// 1 - 2^(j-m), which gives a simple Markov chain.
double affine_span_probability(unsigned m, std::size_t s);

}  // namespace rmlab
