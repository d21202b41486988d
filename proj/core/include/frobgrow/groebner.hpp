#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "frobgrow/budget.hpp"
#include "frobgrow/ideal.hpp"
#include "frobgrow/multipoly.hpp"

namespace frobgrow {

/// Reduced basis of I under `order`; cached on I.
const std::vector<MultiPoly>& groebner_basis(const Ideal& I, const OrderPtr& order);
const std::vector<MultiPoly>& groebner_basis(const Ideal& I);

/// Remainder of f modulo the reduced basis of I; zero iff f ∈ I.
MultiPoly normal_form(const MultiPoly& f, const Ideal& I);
MultiPoly normal_form(const MultiPoly& f, const Ideal& I, const OrderPtr& order);
bool contains(const Ideal& I, const MultiPoly& f);
/// J ⊆ I, checked generator by generator.
bool contains(const Ideal& I, const Ideal& J);
/// Equal reduced bases under the default order. Throws on ring mismatch.
bool ideal_equal(const Ideal& I, const Ideal& J);

/// I + J and I + (f).
Ideal sum(const Ideal& I, const Ideal& J);
Ideal sum(const Ideal& I, const std::vector<MultiPoly>& extra);

/// I ∩ k[kept variables], computed with a block order that eliminates `front`.
/// The result lives in the same polynomial ring but carries no relations.
Ideal eliminate(const Ideal& I, const std::vector<std::size_t>& front);

/// I ∩ J via an auxiliary variable w: eliminate w from w*I + (1-w)*J.
Ideal intersect(const Ideal& I, const Ideal& J);

/// I : f = (I ∩ (f)) / f. Throws InputError for f = 0.
Ideal colon(const Ideal& I, const MultiPoly& f);
/// I : J as the intersection of I : g over J's generators. Throws for empty J.
Ideal colon_ideal(const Ideal& I, const Ideal& J);

struct SaturationResult {
  Ideal ideal;
  /// First N with I : f^N = I : f^(N+1).
  unsigned stabilization_exponent;
};
/// Iterated colon until stabilization.
SaturationResult saturate(const Ideal& I, const MultiPoly& f);

/// P^k ⊆ Q, testing every degree-k product of P's generators. Products that
/// contain a power of a generator already known to lie in Q are skipped.
bool power_containment(const Ideal& P, unsigned k, const Ideal& Q);

/// Decides whether f = Σ c_i g_i over the generators (and relations) of I with
/// multipliers of degree ≤ t_bound in the weight-0 variables and weighted
/// degree ≤ x_bound, by one linear system over F_p. `true` is definitive;
/// `false` only means "not within these bounds".
bool member_bounded_oracle(const MultiPoly& f, const Ideal& I, unsigned t_bound, unsigned x_bound);

}  // namespace frobgrow
