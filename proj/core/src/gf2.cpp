#include "rmlab/gf2.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace rmlab {

namespace {

using word_type = BitVector::word_type;
constexpr std::size_t kWordBits = BitVector::kWordBits;

word_type tail_mask(std::size_t len) {
  const std::size_t rem = len % kWordBits;
  return rem == 0 ? ~word_type{0} : (word_type{1} << rem) - 1;
}

void mask_tail(std::span<word_type> words, std::size_t len) {
  if (!words.empty()) words.back() &= tail_mask(len);
}

}  // namespace

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("bit string may only contain '0' and '1'");
    }
  }
  return v;
}

BitVector BitVector::ones(std::size_t len) {
  BitVector v(len);
  std::fill(v.words_.begin(), v.words_.end(), ~word_type{0});
  mask_tail(v.words_, len);
  return v;
}

BitVector BitVector::unit(std::size_t len, std::size_t index) {
  if (index >= len) throw std::out_of_range("unit vector index out of range");
  BitVector v(len);
  v.set(index);
  return v;
}

BitVector BitVector::random(std::size_t len, Rng& rng) {
  BitVector v(len);
  for (auto& w : v.words_) w = rng();
  mask_tail(v.words_, len);
  return v;
}

BitVector BitVector::indicator(std::size_t len, std::span<const std::size_t> support) {
  BitVector v(len);
  for (std::size_t i : support) {
    if (i >= len) throw std::out_of_range("indicator coordinate out of range");
    v.flip(i);
  }
  return v;
}

void BitVector::clear() { std::fill(words_.begin(), words_.end(), 0); }

std::size_t BitVector::weight() const {
  std::size_t total = 0;
  for (word_type w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool BitVector::any() const {
  return std::any_of(words_.begin(), words_.end(), [](word_type w) { return w != 0; });
}

bool BitVector::dot(const BitVector& other) const {
  require_same_size(other);
  word_type acc = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & other.words_[i];
  return (std::popcount(acc) & 1) != 0;
}

std::size_t BitVector::next_set(std::size_t from) const {
  if (from >= len_) return len_;
  std::size_t w = from / kWordBits;
  word_type cur = words_[w] & (~word_type{0} << (from % kWordBits));
  while (true) {
    if (cur != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(cur));
    if (++w == words_.size()) return len_;
    cur = words_[w];
  }
}

std::vector<std::size_t> BitVector::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = next_set(0); i < len_; i = next_set(i + 1)) out.push_back(i);
  return out;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  require_same_size(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
  require_same_size(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

BitVector& BitVector::operator|=(const BitVector& other) {
  require_same_size(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

void BitVector::xor_tail(const BitVector& other, std::size_t first_word) {
  for (std::size_t i = first_word; i < words_.size(); ++i) words_[i] ^= other.words_[i];
}

bool operator<(const BitVector& a, const BitVector& b) {
  if (a.len_ != b.len_) return a.len_ < b.len_;
  for (std::size_t i = 0; i < a.words_.size(); ++i) {
    if (a.words_[i] == b.words_[i]) continue;
    // The lowest differing index decides, matching to_string() order.
    const word_type diff = a.words_[i] ^ b.words_[i];
    const word_type low = diff & (~diff + 1);
    return (b.words_[i] & low) != 0;
  }
  return false;
}

std::string BitVector::to_string() const {
  std::string out(len_, '0');
  for (std::size_t i = 0; i < len_; ++i) {
    if (get(i)) out[i] = '1';
  }
  return out;
}

void BitVector::require_same_size(const BitVector& other) const {
  if (len_ != other.len_) throw std::invalid_argument("bit vector length mismatch");
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitMatrix BitMatrix::from_rows(std::vector<BitVector> rows, std::size_t cols) {
  for (const auto& r : rows) {
    if (r.size() != cols) throw std::invalid_argument("row length does not match column count");
  }
  BitMatrix m;
  m.cols_ = cols;
  m.rows_ = std::move(rows);
  return m;
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  std::vector<BitVector> parsed;
  parsed.reserve(rows.size());
  for (const auto& r : rows) parsed.push_back(BitVector::from_string(r));
  return from_rows(std::move(parsed), cols);
}

BitMatrix BitMatrix::random(std::size_t rows, std::size_t cols, Rng& rng) {
  BitMatrix m(rows, cols);
  for (auto& r : m.rows_) r = BitVector::random(cols, rng);
  return m;
}

BitMatrix BitMatrix::parse(std::istream& in) {
  // Blank lines and lines starting with '#' are skipped.
  auto next_line = [&in](std::string& line) {
    while (std::getline(in, line)) {
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      const auto last = line.find_last_not_of(" \t\r");
      line = line.substr(first, last - first + 1);
      return true;
    }
    return false;
  };
  std::string line;
  std::size_t rows = 0;
  std::size_t cols = 0;
  if (!next_line(line)) throw std::invalid_argument("matrix text: missing 'rows cols' header");
  {
    std::istringstream header(line);
    std::string extra;
    if (!(header >> rows >> cols) || (header >> extra)) throw std::invalid_argument("matrix text: bad 'rows cols' header");
  }
  BitMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (cols == 0) continue;
    if (!next_line(line) || line.size() != cols) {
      throw std::invalid_argument("matrix text: row " + std::to_string(r) + " has wrong length");
    }
    m.rows_[r] = BitVector::from_string(line);
  }
  return m;
}

BitMatrix BitMatrix::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse(in);
}

std::string BitMatrix::to_text() const {
  std::string out = std::to_string(rows()) + " " + std::to_string(cols_) + "\n";
  for (const auto& r : rows_) {
    out += r.to_string();
    out += '\n';
  }
  return out;
}

BitVector BitMatrix::column(std::size_t c) const {
  if (c >= cols_) throw std::out_of_range("column index out of range");
  BitVector v(rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    if (rows_[r].get(c)) v.set(r);
  }
  return v;
}

void BitMatrix::append_row(BitVector row) {
  if (row.size() != cols_) throw std::invalid_argument("row length does not match column count");
  rows_.push_back(std::move(row));
}

std::ostream& operator<<(std::ostream& os, const BitVector& v) { return os << v.to_string(); }

std::ostream& operator<<(std::ostream& os, const BitMatrix& m) { return os << m.to_text(); }

namespace {

// In-place elimination. With `full` the result is reduced row-echelon form,
// otherwise only entries below each pivot are cleared.
std::vector<std::size_t> eliminate(BitMatrix& m, bool full) {
  std::vector<std::size_t> pivots;
  std::size_t next_row = 0;
  for (std::size_t c = 0; c < m.cols() && next_row < m.rows(); ++c) {
    std::size_t p = next_row;
    while (p < m.rows() && !m.get(p, c)) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, next_row);
    const BitVector& pivot_row = m.row(next_row);
    const std::size_t first_word = c / kWordBits;
    for (std::size_t r = full ? 0 : next_row + 1; r < m.rows(); ++r) {
      if (r != next_row && m.get(r, c)) m.row(r).xor_tail(pivot_row, first_word);
    }
    pivots.push_back(c);
    ++next_row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const BitMatrix& m) {
  BitMatrix work = m;
  return eliminate(work, false).size();
}

RrefResult rref(const BitMatrix& m) {
  RrefResult out{m, {}};
  out.pivots = eliminate(out.reduced, true);
  return out;
}

std::optional<BitVector> solve_any(const BitMatrix& a, const BitVector& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve_any: rhs length must equal row count");
  const std::size_t n = a.cols();
  BitMatrix aug(a.rows(), n + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = a.row(r).next_set(0); c < n; c = a.row(r).next_set(c + 1)) aug.set(r, c);
    if (b.get(r)) aug.set(r, n);
  }
  const auto [reduced, pivots] = rref(aug);
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;
  BitVector x(n);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (reduced.get(i, n)) x.set(pivots[i]);
  }
  return x;
}

BitMatrix kernel_basis(const BitMatrix& a) {
  const auto [reduced, pivots] = rref(a);
  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  BitMatrix basis(0, n);
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    BitVector v(n);
    v.set(f);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      if (reduced.get(i, f)) v.set(pivots[i]);
    }
    basis.append_row(std::move(v));
  }
  return basis;
}

BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: inner dimensions differ");
  BitMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    const BitVector& ar = a.row(r);
    for (std::size_t k = ar.next_set(0); k < a.cols(); k = ar.next_set(k + 1)) out.row(r) ^= b.row(k);
  }
  return out;
}

BitVector mat_vec(const BitMatrix& a, const BitVector& x) {
  if (x.size() != a.cols()) throw std::invalid_argument("mat_vec: vector length must equal column count");
  BitVector out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    if (a.row(r).dot(x)) out.set(r);
  }
  return out;
}

BitVector vec_mat(const BitVector& x, const BitMatrix& a) {
  if (x.size() != a.rows()) throw std::invalid_argument("vec_mat: vector length must equal row count");
  BitVector out(a.cols());
  for (std::size_t r = x.next_set(0); r < x.size(); r = x.next_set(r + 1)) out ^= a.row(r);
  return out;
}

BitMatrix transpose(const BitMatrix& a) {
  BitMatrix out(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    const BitVector& row = a.row(r);
    for (std::size_t c = row.next_set(0); c < a.cols(); c = row.next_set(c + 1)) out.set(c, r);
  }
  return out;
}

BitMatrix select_columns(const BitMatrix& a, std::span<const std::size_t> columns) {
  for (std::size_t c : columns) {
    if (c >= a.cols()) throw std::out_of_range("select_columns: index out of range");
  }
  BitMatrix out(a.rows(), columns.size());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (a.get(r, columns[j])) out.set(r, j);
    }
  }
  return out;
}

BitMatrix select_rows(const BitMatrix& a, std::span<const std::size_t> rows) {
  std::vector<BitVector> picked;
  picked.reserve(rows.size());
  for (std::size_t r : rows) {
    if (r >= a.rows()) throw std::out_of_range("select_rows: index out of range");
    picked.push_back(a.row(r));
  }
  return BitMatrix::from_rows(std::move(picked), a.cols());
}

BitVector hadamard(const BitVector& u, const BitVector& v) { return u & v; }

BitMatrix random_invertible(std::size_t m, Rng& rng) {
  if (m == 0) throw std::invalid_argument("random_invertible: dimension must be positive");
  while (true) {
    BitMatrix candidate = BitMatrix::random(m, m, rng);
    if (rank(candidate) == m) return candidate;
  }
}

}  // namespace rmlab
