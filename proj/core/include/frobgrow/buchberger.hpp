#pragma once

#include <cstddef>
#include <vector>

#include "frobgrow/budget.hpp"
#include "frobgrow/multipoly.hpp"

namespace frobgrow {

struct BuchbergerStats {
  std::size_t pairs_processed = 0;
  std::size_t pairs_skipped = 0;
  std::size_t zero_reductions = 0;
  std::size_t basis_size = 0;
};

/// Reduced Gröbner basis of `gens` under `order`: monic, sorted by increasing
/// leading monomial. Sugar selection with the Gebauer-Möller installation of
/// both Buchberger criteria.
std::vector<MultiPoly> reduced_groebner_basis(const std::vector<MultiPoly>& gens, const PolyRingPtr& ring,
                                              const OrderPtr& order, const Budget& budget,
                                              BuchbergerStats* stats = nullptr);

/// Full normal form of f modulo `basis` (which must be sorted by `f.order()`).
MultiPoly reduce_full(const MultiPoly& f, const std::vector<MultiPoly>& basis);

}  // namespace frobgrow
