#pragma once

#include <memory>
#include <string>
#include <vector>

#include "frobgrow/budget.hpp"
#include "frobgrow/multipoly.hpp"
#include "frobgrow/ringspec.hpp"

namespace frobgrow {

/// An ideal of S/(relations), stored as its listed generators. Reduced Gröbner
/// bases of generators ∪ relations are computed lazily, at most once per monomial
/// order, and shared by every copy of the handle.
class Ideal {
 public:
  Ideal(RingSpecPtr ring, std::vector<MultiPoly> generators);

  const RingSpecPtr& ring_spec() const { return ring_; }
  const PolyRingPtr& ring() const { return ring_->ring(); }
  const std::vector<MultiPoly>& generators() const { return gens_; }
  /// generators followed by the ring relations.
  std::vector<MultiPoly> all_generators() const;

  /// Reduced basis under `order` (default: the ring's default order).
  const std::vector<MultiPoly>& basis(const OrderPtr& order, const Budget& budget) const;
  const std::vector<MultiPoly>& basis(const OrderPtr& order) const { return basis(order, current_budget()); }
  const std::vector<MultiPoly>& basis() const { return basis(ring()->default_order()); }
  bool has_cached_basis(const OrderPtr& order) const;
  /// Installs a basis known to be the reduced basis under `order`.
  void seed_basis(const OrderPtr& order, std::vector<MultiPoly> basis) const;

  bool is_unit() const;
  bool is_zero() const;
  /// "(g1, g2, ...)" in canonical text.
  std::string to_string() const;

 private:
  struct Cache;

  RingSpecPtr ring_;
  std::vector<MultiPoly> gens_;
  std::shared_ptr<Cache> cache_;
};

/// Ideal generated by the given expressions (parsed in the ring).
Ideal make_ideal(const RingSpecPtr& ring, const std::vector<std::string>& exprs);

}  // namespace frobgrow
