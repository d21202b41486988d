#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <nlohmann/json.hpp>

#include "frobgrow/budget.hpp"
#include "frobgrow/factor.hpp"
#include "frobgrow/modulus.hpp"
#include "frobgrow/monomial.hpp"
#include "frobgrow/polymatrix.hpp"
#include "frobgrow/ringspec.hpp"

namespace frobgrow {

struct MinorColumn {
  std::size_t relation;
  Monomial w;
};

/// Rows: monomials u in the weight-1 variables with |u| = d and every exponent
/// below q. Columns: pairs (i, w) with |w| = d - deg f_i. Entry: the k[t]
/// coefficient of x^(u-w) in f_i, or 0 when u - w is not a monomial.
struct MinorMatrix {
  unsigned d = 0;
  std::vector<Monomial> rows;
  std::vector<MinorColumn> cols;
  PolyMatrix entries;
};

/// Throws InputError when a relation is not homogeneous of positive degree, when
/// the ring lacks a unique weight-0 variable, or when d is outside 1..n(q-1).
MinorMatrix build_Md(const RingSpec& ring, const PrimePower& q, unsigned d);

struct MinorsResult {
  UniPoly lcm;
  /// Square submatrices visited (including structurally singular ones skipped cheaply).
  std::size_t examined = 0;
  std::size_t determinants = 0;
  bool partial = false;
};

/// Monic lcm of every nonzero minor of every size. The support graph is split
/// into connected blocks first: a nonzero minor is a product of square block
/// minors, so the lcm is the product of the per-block lcms. Stops and flags
/// `partial` once `budget.minor_subsets` submatrices have been visited or the
/// deadline passes.
MinorsResult minors_lcm(const PolyMatrix& m, const Budget& budget, const Deadline* deadline = nullptr);

struct DegreeStats {
  unsigned d;
  std::size_t rows, cols, examined;
  bool partial;
};

struct HqCertificate {
  PrimePower q;
  unsigned graded_vars = 0;
  UniPoly h;
  FactorList factorization;
  unsigned s_max = 0;
  /// s_max / q^(n-1) as an exact fraction.
  std::uint64_t bound_numerator = 0;
  std::uint64_t bound_denominator = 1;
  std::size_t minors_examined = 0;
  bool budget_exhausted = false;
  std::vector<DegreeStats> degrees;

  double bound_constant() const { return static_cast<double>(bound_numerator) / static_cast<double>(bound_denominator); }
  nlohmann::ordered_json to_json() const;
};

/// lcm over d = 1..n(q-1) of minors_lcm(build_Md(ring, q, d)), factored with `seed`.
HqCertificate h_q(const RingSpec& ring, const PrimePower& q, const Budget& budget, std::uint64_t seed);

/// Integral solution b' of A b' = sums when every sum is divisible by the nonzero
/// minors of A: a maximal nonsingular submatrix is bordered with identity rows for
/// the free columns and solved by Cramer's rule. Throws InputError naming the
/// minor when the system is inconsistent or the division is not exact.
std::vector<UniPoly> minor_lift(const PolyMatrix& A, const std::vector<UniPoly>& sums);

}  // namespace frobgrow
