#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "frobgrow/ideal.hpp"
#include "frobgrow/parser.hpp"
#include "frobgrow/ringspec.hpp"

namespace frobgrow::testing {

struct Var {
  std::string name;
  unsigned weight;
};

inline PolyRingPtr poly_ring(std::uint64_t p, const std::vector<Var>& vars) {
  std::vector<Variable> vs;
  for (const auto& v : vars) vs.push_back({v.name, v.weight});
  return PolyRing::make(PrimeModulus(p), vs);
}

inline RingSpecPtr ring(std::uint64_t p, const std::vector<Var>& vars, const std::vector<std::string>& relations = {}) {
  auto r = poly_ring(p, vars);
  std::vector<MultiPoly> rels;
  for (const auto& s : relations) rels.push_back(parse_poly(s, r));
  return make_ring_spec(r, rels);
}

inline Ideal ideal(const RingSpecPtr& r, const std::vector<std::string>& gens) { return make_ideal(r, gens); }

inline MultiPoly poly(const RingSpecPtr& r, const std::string& s) { return parse_poly(s, *r); }

inline UniPoly uni(std::uint64_t p, const std::string& s) { return parse_uni(s, PrimeModulus(p)); }

inline UniPoly random_uni(std::mt19937_64& rng, PrimeModulus p, int max_degree, bool nonzero = true) {
  for (;;) {
    int d = static_cast<int>(rng() % (max_degree + 1));
    std::vector<std::uint32_t> c(d + 1);
    for (auto& x : c) x = static_cast<std::uint32_t>(rng() % p.value());
    UniPoly u(p, c);
    if (!nonzero || !u.is_zero()) return u;
  }
}

}  // namespace frobgrow::testing
