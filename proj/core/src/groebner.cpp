#include "frobgrow/groebner.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <unordered_map>

#include "frobgrow/buchberger.hpp"
#include "frobgrow/errors.hpp"

namespace frobgrow {
namespace {

std::string aux_name(const PolyRing& ring) {
  std::string name = "_w";
  while (ring.index_of(name)) name += "_";
  return name;
}

// (front ∪ back) ordering for eliminating `front`; each block keeps the
// relative order of the ring's default rank.
OrderPtr elimination_order(const PolyRing& ring, const std::vector<std::size_t>& front) {
  std::vector<std::size_t> rank;
  std::vector<std::size_t> back;
  for (auto v : ring.default_rank()) {
    if (std::find(front.begin(), front.end(), v) != front.end()) {
      rank.push_back(v);
    } else {
      back.push_back(v);
    }
  }
  const std::size_t nfront = rank.size();
  rank.insert(rank.end(), back.begin(), back.end());
  return std::make_shared<const MonomialOrder>(MonomialOrder::block(std::move(rank), nfront, ring.weights()));
}

// Reduced basis of (I_gens) ∩ (J_gens) in S, plus the auxiliary-ring data.
std::vector<MultiPoly> intersect_generators(const PolyRingPtr& ring, const std::vector<MultiPoly>& a,
                                            const std::vector<MultiPoly>& b) {
  PolyRingPtr ext = ring->with_extra_variable(aux_name(*ring));
  const std::size_t w = ext->nvars() - 1;
  MultiPoly wv = MultiPoly::variable(ext, w);
  MultiPoly one_minus_w = MultiPoly::constant(ext, 1) - wv;
  std::vector<MultiPoly> gens;
  for (const auto& g : a) gens.push_back(wv * change_ring(g, ext));
  for (const auto& g : b) gens.push_back(one_minus_w * change_ring(g, ext));
  OrderPtr order = elimination_order(*ext, {w});
  auto basis = reduced_groebner_basis(gens, ext, order, current_budget());
  std::vector<MultiPoly> kept;
  for (const auto& g : basis)
    if (!g.involves(w)) kept.push_back(change_ring(g, ring));
  std::sort(kept.begin(), kept.end(), [&](const MultiPoly& x, const MultiPoly& y) {
    return ring->default_order()->compare(x.lead().m, y.lead().m) < 0;
  });
  return kept;
}

}  // namespace

const std::vector<MultiPoly>& groebner_basis(const Ideal& I, const OrderPtr& order) { return I.basis(order); }
const std::vector<MultiPoly>& groebner_basis(const Ideal& I) { return I.basis(); }

MultiPoly normal_form(const MultiPoly& f, const Ideal& I, const OrderPtr& order) {
  require_same_ring(*f.ring(), *I.ring());
  return reduce_full(f.with_order(order), I.basis(order));
}

MultiPoly normal_form(const MultiPoly& f, const Ideal& I) { return normal_form(f, I, I.ring()->default_order()); }

bool contains(const Ideal& I, const MultiPoly& f) { return normal_form(f, I).is_zero(); }

bool contains(const Ideal& I, const Ideal& J) {
  require_same_ring(*I.ring_spec(), *J.ring_spec());
  for (const auto& g : J.all_generators())
    if (!contains(I, g)) return false;
  return true;
}

bool ideal_equal(const Ideal& I, const Ideal& J) {
  require_same_ring(*I.ring_spec(), *J.ring_spec());
  return I.basis() == J.basis();
}

Ideal sum(const Ideal& I, const Ideal& J) {
  require_same_ring(*I.ring_spec(), *J.ring_spec());
  auto gens = I.generators();
  for (const auto& g : J.generators()) gens.push_back(g);
  return Ideal(I.ring_spec(), std::move(gens));
}

Ideal sum(const Ideal& I, const std::vector<MultiPoly>& extra) {
  auto gens = I.generators();
  for (const auto& g : extra) gens.push_back(g);
  return Ideal(I.ring_spec(), std::move(gens));
}

Ideal eliminate(const Ideal& I, const std::vector<std::size_t>& front) {
  const auto& ring = I.ring();
  for (auto v : front)
    if (v >= ring->nvars()) throw InputError("eliminated variable index out of range");
  OrderPtr order = elimination_order(*ring, front);
  std::vector<MultiPoly> kept;
  for (const auto& g : I.basis(order)) {
    bool free = true;
    for (auto v : front) free = free && !g.involves(v);
    if (free) kept.push_back(g.with_order(ring->default_order()));
  }
  return Ideal(make_ring_spec(ring), std::move(kept));
}

Ideal intersect(const Ideal& I, const Ideal& J) {
  require_same_ring(*I.ring_spec(), *J.ring_spec());
  auto kept = intersect_generators(I.ring(), I.all_generators(), J.all_generators());
  // The w-free part of the block basis is the reduced basis of I ∩ J under the
  // back block, which is exactly the ring's default order.
  Ideal result(I.ring_spec(), kept);
  result.seed_basis(I.ring()->default_order(), kept);
  return result;
}

Ideal colon(const Ideal& I, const MultiPoly& f) {
  require_same_ring(*I.ring(), *f.ring());
  if (f.is_zero()) throw InputError("colon by the zero polynomial");
  MultiPoly g = f.with_order(I.ring()->default_order());
  if (g.is_constant()) return I;
  auto kept = intersect_generators(I.ring(), I.all_generators(), {g});
  std::vector<MultiPoly> quotients;
  quotients.reserve(kept.size());
  for (const auto& h : kept) quotients.push_back(divide_exact(h, g));
  return Ideal(I.ring_spec(), std::move(quotients));
}

Ideal colon_ideal(const Ideal& I, const Ideal& J) {
  require_same_ring(*I.ring_spec(), *J.ring_spec());
  if (J.generators().empty()) throw InputError("colon by an ideal with no generators");
  std::optional<Ideal> acc;
  for (const auto& g : J.generators()) {
    Ideal c = colon(I, g);
    acc = acc ? intersect(*acc, c) : c;
  }
  return *acc;
}

SaturationResult saturate(const Ideal& I, const MultiPoly& f) {
  if (f.is_zero()) throw InputError("saturation by the zero polynomial");
  const Budget budget = current_budget();
  Ideal current = I;
  for (unsigned n = 0;; ++n) {
    if (n > budget.saturation_steps)
      throw BudgetExceeded("saturation did not stabilize within " + std::to_string(budget.saturation_steps) + " colons");
    Ideal next = colon(current, f);
    if (ideal_equal(next, current)) return {current, n};
    current = next;
  }
}

bool power_containment(const Ideal& P, unsigned k, const Ideal& Q) {
  require_same_ring(*P.ring(), *Q.ring());
  std::vector<MultiPoly> gens;
  for (const auto& g : P.generators())
    if (!g.is_zero()) gens.push_back(g);
  if (k == 0 || gens.empty()) return contains(Q, MultiPoly::constant(Q.ring(), 1)) || (k > 0 && gens.empty());

  const Budget budget = current_budget();
  // powers[i][a] = g_i^a for a below the first exponent that lands in Q.
  std::vector<std::vector<MultiPoly>> powers(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    powers[i].push_back(MultiPoly::constant(Q.ring(), 1));
    for (unsigned a = 1; a <= k; ++a) {
      MultiPoly next = powers[i].back() * gens[i];
      if (contains(Q, next)) break;
      powers[i].push_back(std::move(next));
    }
  }

  std::size_t examined = 0;
  std::vector<unsigned> expo(gens.size(), 0);
  // Depth-first over exponent vectors with Σ expo = k and expo[i] < powers[i].size().
  std::function<bool(std::size_t, unsigned, const MultiPoly&)> walk = [&](std::size_t i, unsigned left,
                                                                        const MultiPoly& partial) -> bool {
    if (i + 1 == gens.size()) {
      if (left >= powers[i].size()) return true;  // contains a power already in Q
      if (++examined > budget.containment_products)
        throw BudgetExceeded("power containment: product budget exceeded");
      return contains(Q, partial * powers[i][left]);
    }
    unsigned top = std::min<unsigned>(left, static_cast<unsigned>(powers[i].size() - 1));
    for (unsigned a = 0; a <= top; ++a)
      if (!walk(i + 1, left - a, partial * powers[i][a])) return false;
    return true;
  };
  return walk(0, k, MultiPoly::constant(Q.ring(), 1));
}

bool member_bounded_oracle(const MultiPoly& f, const Ideal& I, unsigned t_bound, unsigned x_bound) {
  require_same_ring(*f.ring(), *I.ring());
  if (f.is_zero()) return true;
  const auto& ring = *I.ring();
  const PrimeModulus& p = ring.modulus();
  const std::size_t n = ring.nvars();

  std::vector<Monomial> multipliers;
  Monomial cur(n);
  std::function<void(std::size_t, unsigned, unsigned)> gen = [&](std::size_t v, unsigned tl, unsigned xl) {
    if (v == n) {
      multipliers.push_back(cur);
      return;
    }
    unsigned cap = ring.weight(v) == 0 ? tl : xl;
    for (unsigned e = 0; e <= cap; ++e) {
      cur.set(v, e);
      if (ring.weight(v) == 0) {
        gen(v + 1, tl - e, xl);
      } else {
        gen(v + 1, tl, xl - e);
      }
    }
    cur.set(v, 0);
  };
  gen(0, t_bound, x_bound);

  auto gens = I.all_generators();
  const Budget budget = current_budget();
  if (multipliers.size() * gens.size() > budget.oracle_dim)
    throw BudgetExceeded("membership oracle: system dimension " + std::to_string(multipliers.size() * gens.size()) +
                         " exceeds budget " + std::to_string(budget.oracle_dim));

  using SparseRow = std::vector<std::pair<std::uint32_t, std::uint32_t>>;
  std::unordered_map<Monomial, std::uint32_t, MonomialHash> column;
  auto col_of = [&](const Monomial& m) {
    auto [it, inserted] = column.try_emplace(m, static_cast<std::uint32_t>(column.size()));
    return it->second;
  };
  auto to_row = [&](const std::vector<Term>& terms, const Monomial& mult) {
    SparseRow r;
    r.reserve(terms.size());
    for (const auto& t : terms) r.emplace_back(col_of(t.m * mult), t.c);
    std::sort(r.begin(), r.end());
    return r;
  };
  // r - c * s, both sorted by column.
  auto axpy = [&](const SparseRow& r, const SparseRow& s, std::uint32_t c) {
    SparseRow out;
    out.reserve(r.size() + s.size());
    std::size_t i = 0, j = 0;
    while (i < r.size() || j < s.size()) {
      if (j == s.size() || (i < r.size() && r[i].first < s[j].first)) {
        out.push_back(r[i++]);
      } else if (i == r.size() || s[j].first < r[i].first) {
        out.emplace_back(s[j].first, p.neg(p.mul(c, s[j].second)));
        ++j;
      } else {
        std::uint32_t v = p.sub(r[i].second, p.mul(c, s[j].second));
        if (v) out.emplace_back(r[i].first, v);
        ++i;
        ++j;
      }
    }
    return out;
  };

  std::unordered_map<std::uint32_t, SparseRow> pivots;
  auto reduce = [&](SparseRow r) {
    for (;;) {
      if (r.empty()) return r;
      auto it = pivots.find(r.front().first);
      if (it == pivots.end()) return r;
      r = axpy(r, it->second, r.front().second);
    }
  };
  for (const auto& g : gens) {
    for (const auto& m : multipliers) {
      SparseRow r = reduce(to_row(g.terms(), m));
      if (r.empty()) continue;
      std::uint32_t inv = p.inv(r.front().second);
      for (auto& e : r) e.second = p.mul(e.second, inv);
      std::uint32_t lead = r.front().first;
      pivots.emplace(lead, std::move(r));
    }
  }

  SparseRow target;
  for (const auto& t : f.terms()) {
    auto it = column.find(t.m);
    if (it == column.end()) return false;
    target.emplace_back(it->second, t.c);
  }
  std::sort(target.begin(), target.end());
  return reduce(std::move(target)).empty();
}

}  // namespace frobgrow
