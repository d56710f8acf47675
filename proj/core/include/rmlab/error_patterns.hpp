#pragma once

// Error patterns: syndromes, the pattern-parity relation ~_r, unique
// decodability by syndrome collision search, maximum-likelihood decoding and
// the erasures-to-errors reductions.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rmlab/channel.hpp"
#include "rmlab/common.hpp"
#include "rmlab/estimate.hpp"
#include "rmlab/gf2.hpp"
#include "rmlab/rm.hpp"

namespace rmlab {

/// An m x s matrix kept as its s columns, each a point of F_2^m.
/// Duplicated columns are allowed.
struct PointMatrix {
  unsigned m = 0;
  std::vector<Point> columns;

  static PointMatrix from_pattern(const Pattern& pattern, unsigned m);
  static PointMatrix from_matrix(const BitMatrix& matrix);
  BitMatrix to_matrix() const;
  /// The columns as a set of coordinates of F_2^m; empty if any repeats.
  std::optional<Pattern> to_pattern() const;
  /// Columns reduced mod 2: points occurring an odd number of times.
  Pattern odd_support() const;

  std::size_t size() const { return columns.size(); }
};

struct Syndrome {
  BitVector value;
  /// (m, degree) when produced by E(m, degree).
  std::optional<std::pair<unsigned, unsigned>> source;

  friend bool operator==(const Syndrome& a, const Syndrome& b) { return a.value == b.value; }
};

/// h * 1_z.
Syndrome syndrome(const BitMatrix& h, const Pattern& z);

/// E(m, r) times the mod-2 sum of the columns of u.
Syndrome eval_syndrome(const PointMatrix& u, unsigned r);

/// u ~_r v through syndrome equality under E(m, r).
bool patterns_equiv(const PointMatrix& u, const PointMatrix& v, unsigned r);

/// u ~_r v straight from the definition: for every set I of at most r rows
/// and every z in F_2^|I|, the columns of u and v restricted to I equal z an
/// equal number of times mod 2.
bool patterns_equiv_combinatorial(const PointMatrix& u, const PointMatrix& v, unsigned r);

/// Columns t * u_i.
PointMatrix affine_transform(const PointMatrix& u, const BitMatrix& t);

/// Some V != U with |V| <= |U| and h * 1_V = h * 1_U, if one exists.
///
/// Two search routes, whichever is cheaper: walk all nonzero codewords c of
/// ker(h) (Gray code over a kernel basis) looking for wt(c + 1_U) <= |U|, or
/// enumerate every V with |V| <= |U| and compare syndromes. Throws
/// BudgetExceeded when both exceed `budget`.
std::optional<Pattern> find_syndrome_collision(const BitMatrix& h, const Pattern& u,
                                               std::uint64_t budget = kDefaultBudget);

bool unique_error_decodable(const BitMatrix& h, const Pattern& u, std::uint64_t budget = kDefaultBudget);

/// The s x s matrix B with rows 1..s-2 supported on {1, 2, i+2}, row s-1 equal
/// to (1,0,1,...,1) and row s to (0,1,1,...,1). B * B^t = I for even s.
BitMatrix companion_matrix(std::size_t s);

/// V = U * B. U and V collide under E(m, 2).
PointMatrix companion_ub(const PointMatrix& u);

struct ReductionReport {
  std::uint64_t examined = 0;           // candidate sets looked at
  std::uint64_t skipped_dependent = 0;  // failed the independence filter
  std::uint64_t checked = 0;            // independent sets tested for decodability
  std::uint64_t violations = 0;
  bool sampled = false;  // true when the candidate space exceeded the budget
  std::vector<Pattern> violation_examples;
};

/// Every U of weight <= max_weight whose columns of E(m, r) are independent
/// must be uniquely decodable from errors under E(m, 2r+1).
ReductionReport check_erasures_to_errors(unsigned m, unsigned r, std::size_t max_weight,
                                         std::uint64_t budget = kDefaultBudget, std::uint64_t seed = kDefaultSeed);

/// Every column set S of h (|S| <= max_weight) independent in h must be
/// uniquely decodable from errors under tensor_power(h, 3).
ReductionReport check_general_reduction(const BitMatrix& h, std::size_t max_weight,
                                        std::uint64_t budget = kDefaultBudget, std::uint64_t seed = kDefaultSeed);

struct MlResult {
  bool unique = false;  // false on a tie for the minimum distance
  BitVector codeword;   // a nearest codeword
  std::size_t distance = 0;
};

/// Exhaustive nearest-codeword search over all 2^k codewords.
MlResult ml_decode(const RmCode& code, const BitVector& received, std::uint64_t budget = kDefaultBudget);
MlResult ml_decode(const BitMatrix& generator, const BitVector& received, std::uint64_t budget = kDefaultBudget);

enum class BscMethod { SyndromeCollision, FullMl };

BscMethod parse_bsc_method(const std::string& text);
std::string to_string(BscMethod method);

/// SyndromeCollision: success iff the sampled pattern is uniquely decodable
/// under parity_check(code). FullMl: encode a random message, flip the
/// pattern, decode by ml_decode, success iff the original codeword comes back
/// with no tie.
McEstimate mc_bsc_success(const RmCode& code, const CorruptionModel& model, std::uint64_t trials, std::uint64_t seed,
                          BscMethod method = BscMethod::SyndromeCollision, std::uint64_t budget = kDefaultBudget);

/// Exact number of uniquely decodable weight-s patterns among all C(n, s).
ExactFraction exact_bsc_success(const RmCode& code, std::size_t s, std::uint64_t budget = kDefaultBudget);
ExactFraction exact_bsc_success(const BitMatrix& h, std::size_t s, std::uint64_t budget = kDefaultBudget);

}  // namespace rmlab
