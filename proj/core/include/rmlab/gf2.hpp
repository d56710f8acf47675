#pragma once

// Dense linear algebra over GF(2) with rows packed into 64-bit words.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rmlab/rng.hpp"

namespace rmlab {

/// Packed bit vector. Bit i lives in word i/64 at position i%64; bits past
/// size() in the last word are always zero.
class BitVector {
 public:
  using word_type = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitVector() = default;
  explicit BitVector(std::size_t len) : len_(len), words_(word_count(len), 0) {}

  /// Parses a string of '0'/'1' characters; bit i is character i.
  static BitVector from_string(std::string_view bits);
  static BitVector ones(std::size_t len);
  static BitVector unit(std::size_t len, std::size_t index);
  static BitVector random(std::size_t len, Rng& rng);
  /// Indicator vector of the given coordinates (duplicates cancel mod 2).
  static BitVector indicator(std::size_t len, std::span<const std::size_t> support);

  static constexpr std::size_t word_count(std::size_t len) { return (len + kWordBits - 1) / kWordBits; }

  std::size_t size() const { return len_; }
  bool empty() const { return len_ == 0; }

  bool get(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  bool operator[](std::size_t i) const { return get(i); }
  void set(std::size_t i, bool value = true) {
    const word_type mask = word_type{1} << (i % kWordBits);
    if (value) {
      words_[i / kWordBits] |= mask;
    } else {
      words_[i / kWordBits] &= ~mask;
    }
  }
  void flip(std::size_t i) { words_[i / kWordBits] ^= word_type{1} << (i % kWordBits); }
  void clear();

  std::size_t weight() const;
  bool any() const;
  bool none() const { return !any(); }
  /// Parity of the coordinate-wise product.
  bool dot(const BitVector& other) const;
  /// Smallest set index >= from, or size() if none.
  std::size_t next_set(std::size_t from) const;
  std::vector<std::size_t> support() const;

  BitVector& operator^=(const BitVector& other);
  BitVector& operator&=(const BitVector& other);
  BitVector& operator|=(const BitVector& other);
  /// XOR restricted to words [first_word, end); used by elimination.
  void xor_tail(const BitVector& other, std::size_t first_word);

  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
  friend BitVector operator|(BitVector a, const BitVector& b) { return a |= b; }
  friend bool operator==(const BitVector&, const BitVector&) = default;
  /// Lexicographic on to_string() (coordinate 0 first); gives a
  /// deterministic order for row-set comparisons.
  friend bool operator<(const BitVector& a, const BitVector& b);

  std::span<const word_type> words() const { return words_; }
  std::span<word_type> words() { return words_; }

  std::string to_string() const;

 private:
  void require_same_size(const BitVector& other) const;

  std::size_t len_ = 0;
  std::vector<word_type> words_;
};

/// Row-major packed matrix over GF(2).
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

  static BitMatrix identity(std::size_t n);
  static BitMatrix from_rows(std::vector<BitVector> rows, std::size_t cols);
  static BitMatrix from_strings(const std::vector<std::string>& rows);
  static BitMatrix random(std::size_t rows, std::size_t cols, Rng& rng);

  /// Text format: a "rows cols" header line followed by one line of
  /// '0'/'1' characters per row. Blank lines and '#' lines are ignored.
  static BitMatrix parse(std::istream& in);
  static BitMatrix parse(std::string_view text);
  std::string to_text() const;

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool value = true) { rows_[r].set(c, value); }

  const BitVector& row(std::size_t r) const { return rows_[r]; }
  BitVector& row(std::size_t r) { return rows_[r]; }
  BitVector column(std::size_t c) const;
  void append_row(BitVector row);
  void swap_rows(std::size_t a, std::size_t b) { std::swap(rows_[a], rows_[b]); }

  const std::vector<BitVector>& row_vectors() const { return rows_; }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVector> rows_;
};

std::ostream& operator<<(std::ostream& os, const BitVector& v);
std::ostream& operator<<(std::ostream& os, const BitMatrix& m);

struct RrefResult {
  BitMatrix reduced;
  std::vector<std::size_t> pivots;
};

std::size_t rank(const BitMatrix& m);
RrefResult rref(const BitMatrix& m);

/// Some x with a*x = b, free variables set to zero; empty if inconsistent.
std::optional<BitVector> solve_any(const BitMatrix& a, const BitVector& b);

/// Basis of {x : a*x = 0} as rows, one per free column of rref(a).
BitMatrix kernel_basis(const BitMatrix& a);

BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b);
BitVector mat_vec(const BitMatrix& a, const BitVector& x);
/// Row vector times matrix: XOR of the rows of `a` selected by `x`.
BitVector vec_mat(const BitVector& x, const BitMatrix& a);
BitMatrix transpose(const BitMatrix& a);
BitMatrix select_columns(const BitMatrix& a, std::span<const std::size_t> columns);
BitMatrix select_rows(const BitMatrix& a, std::span<const std::size_t> rows);

/// Coordinate-wise product.
BitVector hadamard(const BitVector& u, const BitVector& v);

/// Rejection-samples uniformly random m x m matrices until one is invertible.
BitMatrix random_invertible(std::size_t m, Rng& rng);

}  // namespace rmlab
