#pragma once

// Reed-Muller codes RM(m, r): monomials, evaluation matrices, the tensor
// generator, duality and Hadamard tensor powers of arbitrary matrices.
//
// Conventions used everywhere in rmlab:
//  * a point of F_2^m is a std::uint64_t whose bit (i-1) is coordinate x_i,
//    so column j of an evaluation matrix is the point with bits j;
//  * monomials are ordered by degree, ties broken by ascending bitmask.
//    This order defines the row order of eval_matrix and the coordinate order
//    of every syndrome.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rmlab/common.hpp"
#include "rmlab/gf2.hpp"

namespace rmlab {

using Point = std::uint64_t;
using WideCount = boost::multiprecision::uint128_t;

inline constexpr unsigned kMaxVariables = 63;
/// Default cap on rows*cols of any constructed matrix (bits).
inline constexpr std::uint64_t kDefaultMatrixCells = std::uint64_t{1} << 32;

/// Exact binomial coefficient; zero when k > n.
WideCount binom(unsigned n, unsigned k);
/// sum_{i=0}^{r} C(m, i); r is clamped to m.
WideCount binom_sum(unsigned m, unsigned r);
/// binom_sum narrowed to size_t; throws std::overflow_error if it does not fit.
std::size_t dimension(unsigned m, unsigned r);

struct Monomial {
  std::uint64_t vars = 0;  // bit i-1 set <=> x_i present

  unsigned degree() const;
  bool evaluate(Point u) const { return (vars & u) == vars; }
  /// "1", "x1", "x1x3", ...
  std::string name() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Monomials of degree <= r in m variables, in canonical order.
std::vector<Monomial> monomials(unsigned m, unsigned r);

/// k x 2^m matrix: entry (f, j) = f(point j).
BitMatrix eval_matrix(unsigned m, unsigned r, std::uint64_t max_cells = kDefaultMatrixCells);

/// Column u of eval_matrix(m, r).
BitVector eval_vector(Point u, unsigned m, unsigned r);

/// Permutation p with p[i] = canonical row index of the i-th monomial in
/// ascending-bitmask (tensor) order: 1, x1, x2, x1x2, x3, ...
std::vector<std::size_t> mask_order(unsigned m, unsigned r);

/// eval_matrix rows rearranged into ascending-bitmask order.
BitMatrix eval_matrix_mask_order(unsigned m, unsigned r);

/// Kronecker product; the index of the first factor is the most significant.
BitMatrix kronecker(const BitMatrix& a, const BitMatrix& b);

/// G(m, r): rows of [[1,1],[0,1]]^{(x)m} with weight >= 2^(m-r).
BitMatrix generator_tensor(unsigned m, unsigned r);

/// Rows are Hadamard products of every subset of at most `ell` rows of `h`,
/// the empty product (all-ones row) first, then by subset size and
/// lexicographic index set. Duplicated rows are kept.
BitMatrix tensor_power(const BitMatrix& h, unsigned ell, std::uint64_t max_cells = kDefaultMatrixCells);

/// The m x 2^m matrix whose column j is the point j.
BitMatrix point_matrix(unsigned m);

class RmCode {
 public:
  RmCode(unsigned m, unsigned r);

  unsigned m() const { return m_; }
  unsigned r() const { return r_; }
  std::size_t n() const { return std::size_t{1} << m_; }
  std::size_t k() const { return dimension(m_, r_); }
  std::size_t d() const { return std::size_t{1} << (m_ - r_); }
  double rate() const { return static_cast<double>(k()) / static_cast<double>(n()); }

  /// E(m, r); rows generate the code.
  BitMatrix generator() const { return eval_matrix(m_, r_); }
  /// E(m, m-r-1), or a 0 x n matrix for RM(m, m).
  BitMatrix parity_check() const;
  /// Codeword of the polynomial whose coefficients (canonical monomial
  /// order) are `message`.
  BitVector encode(const BitVector& message) const;

  std::string name() const;

 private:
  unsigned m_;
  unsigned r_;
};

BitMatrix parity_check(const RmCode& code);
BitVector encode(const RmCode& code, const BitVector& message);

}  // namespace rmlab
