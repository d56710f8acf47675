#include "rmlab/rm.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "rmlab/common.hpp"

namespace rmlab {

WideCount binom(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  WideCount c = 1;
  for (unsigned i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

WideCount binom_sum(unsigned m, unsigned r) {
  WideCount total = 0;
  for (unsigned i = 0; i <= std::min(m, r); ++i) total += binom(m, i);
  return total;
}

std::size_t dimension(unsigned m, unsigned r) {
  const WideCount k = binom_sum(m, r);
  if (k > WideCount(std::numeric_limits<std::size_t>::max())) {
    throw std::overflow_error("code dimension does not fit in size_t");
  }
  return static_cast<std::size_t>(k);
}

unsigned Monomial::degree() const { return static_cast<unsigned>(std::popcount(vars)); }

std::string Monomial::name() const {
  if (vars == 0) return "1";
  std::string out;
  for (unsigned i = 0; i < 64; ++i) {
    if ((vars >> i) & 1U) out += "x" + std::to_string(i + 1);
  }
  return out;
}

namespace {

void check_params(unsigned m, unsigned r) {
  if (m > kMaxVariables) throw std::invalid_argument("m exceeds the supported number of variables");
  if (r > m) throw std::invalid_argument("degree r must not exceed m");
}

// Next integer with the same popcount (Gosper's hack).
std::uint64_t next_same_popcount(std::uint64_t v) {
  const std::uint64_t t = v | (v - 1);
  return (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
}

}  // namespace

std::vector<Monomial> monomials(unsigned m, unsigned r) {
  check_params(m, r);
  std::vector<Monomial> out;
  out.reserve(dimension(m, r));
  out.push_back({0});
  const std::uint64_t limit = std::uint64_t{1} << m;
  for (unsigned deg = 1; deg <= r; ++deg) {
    for (std::uint64_t v = (std::uint64_t{1} << deg) - 1; v < limit; v = next_same_popcount(v)) {
      out.push_back({v});
      if (deg == m) break;  // single mask; Gosper would overflow past it
    }
  }
  return out;
}

BitMatrix eval_matrix(unsigned m, unsigned r, std::uint64_t max_cells) {
  check_params(m, r);
  const WideCount cells = binom_sum(m, r) * (WideCount(1) << m);
  if (cells > max_cells) throw BudgetExceeded("evaluation matrix E(m,r) exceeds the matrix cell budget");
  const auto monos = monomials(m, r);
  const std::size_t n = std::size_t{1} << m;
  BitMatrix e(monos.size(), n);
  for (std::size_t i = 0; i < monos.size(); ++i) {
    const std::uint64_t f = monos[i].vars;
    BitVector& row = e.row(i);
    // Points containing f are f | s for s ranging over subsets of ~f.
    const std::uint64_t free = (n - 1) & ~f;
    std::uint64_t s = 0;
    do {
      row.set(f | s);
      s = (s - free) & free;
    } while (s != 0);
  }
  return e;
}

BitVector eval_vector(Point u, unsigned m, unsigned r) {
  check_params(m, r);
  if (m < 64 && (u >> m) != 0) throw std::out_of_range("point has bits beyond m");
  const auto monos = monomials(m, r);
  BitVector v(monos.size());
  for (std::size_t i = 0; i < monos.size(); ++i) {
    if (monos[i].evaluate(u)) v.set(i);
  }
  return v;
}

std::vector<std::size_t> mask_order(unsigned m, unsigned r) {
  const auto monos = monomials(m, r);
  std::vector<std::size_t> perm(monos.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return monos[a].vars < monos[b].vars; });
  return perm;
}

BitMatrix eval_matrix_mask_order(unsigned m, unsigned r) {
  const auto perm = mask_order(m, r);
  return select_rows(eval_matrix(m, r), perm);
}

BitMatrix kronecker(const BitMatrix& a, const BitMatrix& b) {
  BitMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar) {
    for (std::size_t br = 0; br < b.rows(); ++br) {
      BitVector& row = out.row(ar * b.rows() + br);
      for (std::size_t ac = 0; ac < a.cols(); ++ac) {
        if (!a.get(ar, ac)) continue;
        for (std::size_t bc = 0; bc < b.cols(); ++bc) {
          if (b.get(br, bc)) row.set(ac * b.cols() + bc);
        }
      }
    }
  }
  return out;
}

BitMatrix generator_tensor(unsigned m, unsigned r) {
  check_params(m, r);
  const BitMatrix kernel = BitMatrix::from_strings({"11", "01"});
  BitMatrix g = BitMatrix::identity(1);
  for (unsigned i = 0; i < m; ++i) g = kronecker(g, kernel);
  const std::size_t min_weight = std::size_t{1} << (m - r);
  BitMatrix out(0, g.cols());
  for (const auto& row : g.row_vectors()) {
    if (row.weight() >= min_weight) out.append_row(row);
  }
  return out;
}

BitMatrix tensor_power(const BitMatrix& h, unsigned ell, std::uint64_t max_cells) {
  if (ell == 0) throw std::invalid_argument("tensor_power: ell must be at least 1");
  const auto k = static_cast<unsigned>(h.rows());
  if (binom_sum(k, ell) * h.cols() > max_cells) {
    throw BudgetExceeded("tensor power exceeds the matrix cell budget");
  }
  BitMatrix out(0, h.cols());
  out.append_row(BitVector::ones(h.cols()));
  // Subsets of each size j in lexicographic order, products built incrementally.
  for (unsigned j = 1; j <= std::min(ell, k); ++j) {
    std::vector<std::size_t> idx(j);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      BitVector prod = h.row(idx[0]);
      for (std::size_t t = 1; t < j; ++t) prod &= h.row(idx[t]);
      out.append_row(std::move(prod));
      std::size_t pos = j;
      while (pos > 0 && idx[pos - 1] == k - j + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t t = pos; t < j; ++t) idx[t] = idx[t - 1] + 1;
    }
  }
  return out;
}

BitMatrix point_matrix(unsigned m) {
  if (m > 30) throw BudgetExceeded("point matrix too large");
  const std::size_t n = std::size_t{1} << m;
  BitMatrix p(m, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (unsigned i = 0; i < m; ++i) {
      if ((j >> i) & 1U) p.set(i, j);
    }
  }
  return p;
}

RmCode::RmCode(unsigned m, unsigned r) : m_(m), r_(r) {
  check_params(m, r);
}

BitMatrix RmCode::parity_check() const {
  if (r_ == m_) return BitMatrix(0, n());
  return eval_matrix(m_, m_ - r_ - 1);
}

BitVector RmCode::encode(const BitVector& message) const {
  if (message.size() != k()) throw std::invalid_argument("encode: message length must equal k");
  return vec_mat(message, generator());
}

std::string RmCode::name() const { return "RM(" + std::to_string(m_) + "," + std::to_string(r_) + ")"; }

BitMatrix parity_check(const RmCode& code) { return code.parity_check(); }

BitVector encode(const RmCode& code, const BitVector& message) { return code.encode(message); }

}  // namespace rmlab
