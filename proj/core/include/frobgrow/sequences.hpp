#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "frobgrow/factor.hpp"
#include "frobgrow/unipoly.hpp"

namespace frobgrow {

/// Coefficients (r0, r1, r2) of the recurrence P_{n+1} = r1 P_n - r0 r2 P_{n-1}.
class SequenceSpec {
 public:
  /// Throws InputError when r1 = 0 and ModulusMismatch on mixed fields.
  SequenceSpec(UniPoly r0, UniPoly r1, UniPoly r2);

  const UniPoly& r0() const { return r0_; }
  const UniPoly& r1() const { return r1_; }
  const UniPoly& r2() const { return r2_; }
  const PrimeModulus& modulus() const { return r1_.modulus(); }
  /// 2 deg r1 > deg r0 + deg r2 (a zero r0 or r2 counts as degree -infinity).
  bool degree_condition() const { return degree_condition_; }

  std::string to_string() const;

 private:
  UniPoly r0_, r1_, r2_;
  bool degree_condition_;
};

/// P_0 = 1, P_1 = r1.
UniPoly p_seq(const SequenceSpec& spec, unsigned n);
/// P_0 .. P_n.
std::vector<UniPoly> p_seq_table(const SequenceSpec& spec, unsigned n);

/// Determinant of the n x n tridiagonal matrix (diagonal r1, superdiagonal r0,
/// subdiagonal r2) by Laplace expansion along rows, memoized on the set of
/// columns already used.
UniPoly tridiag_det(const SequenceSpec& spec, unsigned n);

/// Monic lcm of P_1 .. P_{n-1}; 1 for n = 1. Throws InputError if some P_i is zero.
UniPoly big_L(const SequenceSpec& spec, unsigned n);

struct CensusEntry {
  std::string label;
  UniPoly poly;
  FactorList factors;
};

struct Census {
  std::vector<CensusEntry> entries;
  /// Union of the factor supports, sorted canonically.
  std::vector<UniPoly> distinct_irreducibles;
  unsigned max_multiplicity = 0;
};

/// Factors every polynomial (InputError for a zero entry or mixed fields).
Census factor_census(const std::vector<std::pair<std::string, UniPoly>>& polys, std::uint64_t seed);

}  // namespace frobgrow
