#pragma once

#include <cstddef>
#include <vector>

#include "frobgrow/unipoly.hpp"

namespace frobgrow {

/// Dense matrix over k[t], row-major.
class PolyMatrix {
 public:
  PolyMatrix(PrimeModulus p, std::size_t rows, std::size_t cols);
  static PolyMatrix from_rows(PrimeModulus p, std::vector<std::vector<UniPoly>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const PrimeModulus& modulus() const { return p_; }
  const UniPoly& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  UniPoly& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

  PolyMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
  /// A * v for a column vector v of length cols().
  std::vector<UniPoly> apply(const std::vector<UniPoly>& v) const;

 private:
  PrimeModulus p_;
  std::size_t rows_, cols_;
  std::vector<UniPoly> a_;
};

/// Square determinant: cofactor expansion up to 3 x 3, fraction-free Bareiss above.
UniPoly determinant(const PolyMatrix& m);
UniPoly bareiss_determinant(PolyMatrix m);
UniPoly cofactor_determinant(const PolyMatrix& m);
/// Laplace expansion along rows, memoized on the used-column set (at most 63 columns).
UniPoly laplace_determinant(const PolyMatrix& m);

struct RankProfile {
  std::size_t rank = 0;
  /// Indices of a maximal set of independent rows and the pivot columns of a
  /// nonsingular rank x rank submatrix on them, both ascending.
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};
/// Greedy echelon profile over the fraction field (leftmost pivots, earliest rows).
RankProfile rank_profile(const PolyMatrix& m);

}  // namespace frobgrow
