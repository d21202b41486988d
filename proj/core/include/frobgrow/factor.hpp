#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "frobgrow/unipoly.hpp"

namespace frobgrow {

/// unit * prod(factor^multiplicity) with monic, pairwise distinct irreducible factors
/// sorted canonically (degree, then coefficients).
struct FactorList {
  std::uint32_t unit = 1;
  std::vector<std::pair<UniPoly, unsigned>> factors;

  UniPoly expand(PrimeModulus p) const;
  unsigned max_multiplicity() const;
  /// e.g. "(t+1)^2*(t^2+t+1)"; a unit other than 1 is printed first.
  std::string to_string(std::string_view var = "t") const;
};

/// Complete factorization over F_p: squarefree, distinct-degree, then seeded
/// equal-degree splitting. Throws InputError for the zero polynomial.
FactorList uni_factor(const UniPoly& a, std::uint64_t seed);

/// Rabin's test: t^(p^n) = t mod f and gcd(t^(p^(n/r)) - t, f) = 1 for primes r | n.
bool is_irreducible(const UniPoly& f);

/// Squarefree decomposition of a monic polynomial: pairs (squarefree part, multiplicity).
std::vector<std::pair<UniPoly, unsigned>> squarefree_decomposition(const UniPoly& f);

}  // namespace frobgrow
