#pragma once

#include "frobgrow/ideal.hpp"
#include "frobgrow/modulus.hpp"

namespace frobgrow {

/// f^q computed term-wise: in characteristic p, (Σ c m)^q = Σ c m^q.
MultiPoly frobenius_power(const MultiPoly& f, const PrimePower& q);

/// I^[q]: the ideal generated by g^q for every listed generator g of I.
/// Throws ModulusMismatch when q.p is not the characteristic of I's ring.
Ideal frobenius_generators(const Ideal& I, const PrimePower& q);

}  // namespace frobgrow
