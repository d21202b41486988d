#include "frobgrow/frobenius.hpp"

#include "frobgrow/errors.hpp"

namespace frobgrow {

MultiPoly frobenius_power(const MultiPoly& f, const PrimePower& q) {
  if (!(q.p == f.modulus())) throw ModulusMismatch("Frobenius power: characteristic mismatch");
  std::vector<Term> terms;
  terms.reserve(f.size());
  const std::size_t n = f.ring()->nvars();
  for (const auto& t : f.terms()) {
    Monomial m(n);
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint64_t e = static_cast<std::uint64_t>(t.m[i]) * q.q;
      if (e > kMaxExponent) throw InputError("Frobenius power: exponent overflow");
      m.set(i, static_cast<std::uint32_t>(e));
    }
    terms.push_back({m, t.c});
  }
  // m -> m^q preserves every monomial order, so the input ordering carries over.
  return MultiPoly::from_sorted(f.ring(), f.order(), std::move(terms));
}

Ideal frobenius_generators(const Ideal& I, const PrimePower& q) {
  if (!(q.p == I.ring()->modulus())) throw ModulusMismatch("Frobenius power: characteristic mismatch");
  std::vector<MultiPoly> gens;
  gens.reserve(I.generators().size());
  for (const auto& g : I.generators()) gens.push_back(frobenius_power(g, q));
  return Ideal(I.ring_spec(), std::move(gens));
}

}  // namespace frobgrow
