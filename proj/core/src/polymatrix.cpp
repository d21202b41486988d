#include "frobgrow/polymatrix.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "frobgrow/errors.hpp"

namespace frobgrow {

PolyMatrix::PolyMatrix(PrimeModulus p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), a_(rows * cols, UniPoly(p)) {}

PolyMatrix PolyMatrix::from_rows(PrimeModulus p, std::vector<std::vector<UniPoly>> rows) {
  const std::size_t c = rows.empty() ? 0 : rows[0].size();
  PolyMatrix m(p, rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw InputError("matrix rows have different lengths");
    for (std::size_t j = 0; j < c; ++j) {
      require_same_modulus(p, rows[i][j].modulus());
      m.at(i, j) = std::move(rows[i][j]);
    }
  }
  return m;
}

PolyMatrix PolyMatrix::submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  PolyMatrix s(p_, rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) s.at(i, j) = at(rows[i], cols[j]);
  return s;
}

std::vector<UniPoly> PolyMatrix::apply(const std::vector<UniPoly>& v) const {
  if (v.size() != cols_) throw InputError("matrix-vector size mismatch");
  std::vector<UniPoly> out(rows_, UniPoly(p_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
  return out;
}

UniPoly cofactor_determinant(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw InputError("determinant of a non-square matrix");
  const PrimeModulus& p = m.modulus();
  if (n == 0) return UniPoly::constant(p, 1);
  if (n == 1) return m.at(0, 0);
  if (n == 2) return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
  UniPoly acc(p);
  for (std::size_t j = 0; j < n; ++j) {
    if (m.at(0, j).is_zero()) continue;
    std::vector<std::size_t> rows, cols;
    for (std::size_t i = 1; i < n; ++i) rows.push_back(i);
    for (std::size_t k = 0; k < n; ++k)
      if (k != j) cols.push_back(k);
    UniPoly term = m.at(0, j) * cofactor_determinant(m.submatrix(rows, cols));
    if (j % 2) {
      acc -= term;
    } else {
      acc += term;
    }
  }
  return acc;
}

UniPoly bareiss_determinant(PolyMatrix m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw InputError("determinant of a non-square matrix");
  const PrimeModulus p = m.modulus();
  if (n == 0) return UniPoly::constant(p, 1);
  bool negate = false;
  UniPoly prev = UniPoly::constant(p, 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k).is_zero()) {
      std::size_t swap = k + 1;
      while (swap < n && m.at(swap, k).is_zero()) ++swap;
      if (swap == n) return UniPoly(p);
      for (std::size_t j = k; j < n; ++j) std::swap(m.at(k, j), m.at(swap, j));
      negate = !negate;
    }
    const UniPoly& piv = m.at(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const UniPoly& lead = m.at(i, k);
      for (std::size_t j = k + 1; j < n; ++j) {
        UniPoly v = piv * m.at(i, j);
        if (!lead.is_zero() && !m.at(k, j).is_zero()) v -= lead * m.at(k, j);
        m.at(i, j) = prev.is_one() ? std::move(v) : exact_div(v, prev);
      }
      m.at(i, k) = UniPoly(p);
    }
    prev = piv;
  }
  UniPoly d = m.at(n - 1, n - 1);
  return negate ? -d : d;
}

UniPoly determinant(const PolyMatrix& m) {
  return m.rows() <= 3 ? cofactor_determinant(m) : bareiss_determinant(m);
}

UniPoly laplace_determinant(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw InputError("determinant of a non-square matrix");
  if (n > 63) throw InputError("Laplace expansion limited to 63 columns");
  const PrimeModulus p = m.modulus();
  std::unordered_map<std::uint64_t, UniPoly> memo;
  auto rec = [&](auto&& self, std::uint64_t used) -> UniPoly {
    const std::size_t row = static_cast<std::size_t>(std::popcount(used));
    if (row == n) return UniPoly::constant(p, 1);
    if (auto it = memo.find(used); it != memo.end()) return it->second;
    UniPoly acc(p);
    std::size_t position = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (used >> j & 1) continue;
      if (!m.at(row, j).is_zero()) {
        UniPoly term = m.at(row, j) * self(self, used | (1ULL << j));
        if (position % 2) {
          acc -= term;
        } else {
          acc += term;
        }
      }
      ++position;
    }
    memo.emplace(used, acc);
    return acc;
  };
  return rec(rec, 0);
}

RankProfile rank_profile(const PolyMatrix& input) {
  PolyMatrix m = input;
  const std::size_t R = m.rows(), C = m.cols();
  const PrimeModulus p = m.modulus();
  std::vector<std::size_t> order(R);
  for (std::size_t i = 0; i < R; ++i) order[i] = i;
  RankProfile out;
  std::size_t r = 0;
  UniPoly prev = UniPoly::constant(p, 1);
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t piv = r;
    while (piv < R && m.at(piv, c).is_zero()) ++piv;
    if (piv == R) continue;
    if (piv != r) {
      // Keep earlier rows first among the remaining ones so the chosen row set is lexicographically smallest.
      for (std::size_t k = piv; k > r; --k) {
        for (std::size_t j = 0; j < C; ++j) std::swap(m.at(k, j), m.at(k - 1, j));
        std::swap(order[k], order[k - 1]);
      }
    }
    out.rows.push_back(order[r]);
    out.cols.push_back(c);
    const UniPoly pv = m.at(r, c);
    for (std::size_t i = r + 1; i < R; ++i) {
      const UniPoly lead = m.at(i, c);
      for (std::size_t j = c + 1; j < C; ++j) {
        UniPoly v = pv * m.at(i, j);
        if (!lead.is_zero() && !m.at(r, j).is_zero()) v -= lead * m.at(r, j);
        m.at(i, j) = prev.is_one() ? std::move(v) : exact_div(v, prev);
      }
      m.at(i, c) = UniPoly(p);
    }
    prev = pv;
    ++r;
  }
  out.rank = r;
  std::sort(out.rows.begin(), out.rows.end());
  return out;
}

}  // namespace frobgrow
