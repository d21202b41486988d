#pragma once

#include <memory>
#include <vector>

#include "frobgrow/multipoly.hpp"
#include "frobgrow/polyring.hpp"

namespace frobgrow {

/// The ambient ring S/(relations). Ideals of the quotient are carried as ideals
/// of S containing the relations.
class RingSpec {
 public:
  /// Throws InputError if a relation is not homogeneous or lives in another ring.
  RingSpec(PolyRingPtr ring, std::vector<MultiPoly> relations = {});

  const PolyRingPtr& ring() const { return ring_; }
  const PrimeModulus& modulus() const { return ring_->modulus(); }
  const std::vector<MultiPoly>& relations() const { return relations_; }
  std::size_t nvars() const { return ring_->nvars(); }

  /// The single weight-0 variable; throws InputError if there is not exactly one.
  std::size_t coefficient_var() const;

  friend bool operator==(const RingSpec& a, const RingSpec& b);

 private:
  PolyRingPtr ring_;
  std::vector<MultiPoly> relations_;
};

using RingSpecPtr = std::shared_ptr<const RingSpec>;

inline RingSpecPtr make_ring_spec(PolyRingPtr ring, std::vector<MultiPoly> relations = {}) {
  return std::make_shared<const RingSpec>(std::move(ring), std::move(relations));
}

void require_same_ring(const RingSpec& a, const RingSpec& b);

}  // namespace frobgrow
