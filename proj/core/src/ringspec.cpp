#include "frobgrow/ringspec.hpp"

#include "frobgrow/errors.hpp"

namespace frobgrow {

RingSpec::RingSpec(PolyRingPtr ring, std::vector<MultiPoly> relations) : ring_(std::move(ring)) {
  for (auto& r : relations) {
    require_same_ring(*ring_, *r.ring());
    if (!weighted_degree(r)) throw InputError("relation not homogeneous: " + r.to_string());
    if (r.is_zero()) continue;
    relations_.push_back(r.with_order(ring_->default_order()));
  }
}

std::size_t RingSpec::coefficient_var() const {
  auto t = ring_->coefficient_vars();
  if (t.size() != 1) throw InputError("ring must have exactly one weight-0 variable");
  return t.front();
}

bool operator==(const RingSpec& a, const RingSpec& b) {
  if (&a == &b) return true;
  return *a.ring_ == *b.ring_ && a.relations_ == b.relations_;
}

void require_same_ring(const RingSpec& a, const RingSpec& b) {
  if (!(a == b)) throw ModulusMismatch("ring mismatch");
}

}  // namespace frobgrow
