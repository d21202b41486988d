#include "frobgrow/buchberger.hpp"

#include <algorithm>
#include <string>

#include "frobgrow/errors.hpp"

namespace frobgrow {
namespace {

struct Element {
  std::vector<Term> terms;  // monic
  Monomial lm;
  std::uint32_t mask = 0;
  std::uint32_t sugar = 0;
  bool active = false;
};

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  std::uint32_t sugar;
};

class Reducer {
 public:
  Reducer(const MonomialOrder& order, const PrimeModulus& p) : order_(order), p_(p) {}

  // Full reduction of f by the listed elements (all monic).
  template <typename Divisors>
  std::vector<Term> reduce(std::vector<Term> f, const Divisors& divisors) const {
    std::vector<Term> rem;
    std::size_t pos = 0;
    while (pos < f.size()) {
      const Term lt = f[pos];
      const std::uint32_t mask = lt.m.support_mask();
      const Element* div = nullptr;
      for (const Element* e : divisors) {
        if ((e->mask & ~mask) == 0 && e->lm.divides(lt.m)) {
          div = e;
          break;
        }
      }
      if (!div) {
        rem.push_back(lt);
        ++pos;
        continue;
      }
      f = kernel::axpy(f, pos + 1, div->terms, 1, lt.m / div->lm, p_.neg(lt.c), order_, p_);
      pos = 0;
    }
    return rem;
  }

 private:
  const MonomialOrder& order_;
  const PrimeModulus& p_;
};

void make_monic(std::vector<Term>& f, const PrimeModulus& p) {
  if (f.empty() || f.front().c == 1) return;
  std::uint32_t inv = p.inv(f.front().c);
  for (auto& t : f) t.c = p.mul(t.c, inv);
}

std::uint32_t poly_sugar(const std::vector<Term>& f, const MonomialOrder& order) {
  std::uint32_t s = 0;
  for (const auto& t : f) s = std::max(s, order.sugar_degree(t.m));
  return s;
}

class Buchberger {
 public:
  Buchberger(const MonomialOrder& order, const PrimeModulus& p, const Budget& budget)
      : order_(order), p_(p), budget_(budget), reducer_(order, p), deadline_(budget.wall_seconds) {}

  void add_input(std::vector<Term> f) {
    f = reducer_.reduce(std::move(f), active());
    if (f.empty()) return;
    make_monic(f, p_);
    const std::uint32_t sugar = poly_sugar(f, order_);
    insert(std::move(f), sugar);
  }

  void run() {
    while (!pairs_.empty()) {
      if (++stats_.pairs_processed > budget_.gb_pairs)
        throw BudgetExceeded("Groebner basis: S-pair budget of " + std::to_string(budget_.gb_pairs) + " exceeded");
      if ((stats_.pairs_processed & 63) == 0) deadline_.check("Groebner basis");
      Pair pr = pop_pair();
      const Element& a = elems_[pr.i];
      const Element& b = elems_[pr.j];
      std::vector<Term> s = kernel::axpy(std::vector<Term>{}, 0, a.terms, 1, pr.lcm / a.lm, 1, order_, p_);
      s = kernel::axpy(s, 0, b.terms, 1, pr.lcm / b.lm, p_.neg(1), order_, p_);
      s = reducer_.reduce(std::move(s), active());
      if (s.empty()) {
        ++stats_.zero_reductions;
        continue;
      }
      make_monic(s, p_);
      insert(std::move(s), pr.sugar);
    }
  }

  std::vector<std::vector<Term>> reduced() {
    std::vector<Element*> basis;
    for (auto& e : elems_)
      if (e.active) basis.push_back(&e);
    std::sort(basis.begin(), basis.end(), [&](const Element* x, const Element* y) { return order_.compare(x->lm, y->lm) < 0; });
    std::vector<std::vector<Term>> out;
    out.reserve(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) {
      std::vector<const Element*> others;
      for (std::size_t l = 0; l < basis.size(); ++l)
        if (l != k) others.push_back(basis[l]);
      std::vector<Term> tail(basis[k]->terms.begin() + 1, basis[k]->terms.end());
      std::vector<Term> g{basis[k]->terms.front()};
      for (auto& t : reducer_.reduce(std::move(tail), others)) g.push_back(t);
      out.push_back(std::move(g));
    }
    stats_.basis_size = out.size();
    return out;
  }

  const BuchbergerStats& stats() const { return stats_; }

 private:
  std::vector<const Element*> active() const {
    std::vector<const Element*> r;
    for (const auto& e : elems_)
      if (e.active) r.push_back(&e);
    return r;
  }

  Pair pop_pair() {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const Pair& x = pairs_[k];
      const Pair& y = pairs_[best];
      if (x.sugar != y.sugar ? x.sugar < y.sugar : order_.compare(x.lcm, y.lcm) < 0) best = k;
    }
    Pair pr = pairs_[best];
    pairs_[best] = pairs_.back();
    pairs_.pop_back();
    return pr;
  }

  std::uint32_t pair_sugar(const Element& a, const Element& b, const Monomial& l) const {
    return std::max(a.sugar + order_.sugar_degree(l / a.lm), b.sugar + order_.sugar_degree(l / b.lm));
  }

  // Gebauer-Möller update with the new element h.
  void insert(std::vector<Term> f, std::uint32_t sugar) {
    Element h;
    h.lm = f.front().m;
    h.mask = h.lm.support_mask();
    h.sugar = sugar;
    h.terms = std::move(f);
    const std::size_t hi = elems_.size();

    struct Cand {
      std::size_t g;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Cand> cands;
    for (std::size_t g = 0; g < elems_.size(); ++g)
      if (elems_[g].active) cands.push_back({g, lcm(h.lm, elems_[g].lm), h.lm.coprime(elems_[g].lm)});

    std::vector<Cand> kept;
    for (std::size_t k = 0; k < cands.size(); ++k) {
      const Cand& c = cands[k];
      bool redundant = false;
      if (!c.coprime) {
        for (std::size_t l = k + 1; l < cands.size() && !redundant; ++l)
          if (cands[l].lcm.divides(c.lcm)) redundant = true;
        for (std::size_t l = 0; l < kept.size() && !redundant; ++l)
          if (kept[l].lcm.divides(c.lcm)) redundant = true;
      }
      if (redundant) {
        ++stats_.pairs_skipped;
      } else {
        kept.push_back(c);
      }
    }

    std::vector<Pair> next;
    next.reserve(pairs_.size() + kept.size());
    for (const auto& pr : pairs_) {
      if (h.lm.divides(pr.lcm) && !(lcm(elems_[pr.i].lm, h.lm) == pr.lcm) && !(lcm(h.lm, elems_[pr.j].lm) == pr.lcm)) {
        ++stats_.pairs_skipped;
        continue;
      }
      next.push_back(pr);
    }
    for (const auto& c : kept) {
      if (c.coprime) {
        ++stats_.pairs_skipped;
        continue;
      }
      next.push_back({c.g, hi, c.lcm, pair_sugar(elems_[c.g], h, c.lcm)});
    }
    pairs_ = std::move(next);

    for (auto& e : elems_)
      if (e.active && h.lm.divides(e.lm)) e.active = false;
    h.active = true;
    elems_.push_back(std::move(h));

    std::size_t live = 0;
    for (const auto& e : elems_) live += e.active;
    if (live > budget_.gb_basis)
      throw BudgetExceeded("Groebner basis: basis-size budget of " + std::to_string(budget_.gb_basis) + " exceeded");
  }

  const MonomialOrder& order_;
  const PrimeModulus& p_;
  const Budget& budget_;
  Reducer reducer_;
  Deadline deadline_;
  std::vector<Element> elems_;
  std::vector<Pair> pairs_;
  BuchbergerStats stats_;
};

}  // namespace

std::vector<MultiPoly> reduced_groebner_basis(const std::vector<MultiPoly>& gens, const PolyRingPtr& ring,
                                              const OrderPtr& order, const Budget& budget, BuchbergerStats* stats) {
  const PrimeModulus& p = ring->modulus();
  std::vector<std::vector<Term>> inputs;
  for (const auto& g : gens) {
    require_same_ring(*ring, *g.ring());
    MultiPoly h = g.with_order(order);
    if (!h.is_zero()) inputs.push_back(h.terms());
  }
  std::sort(inputs.begin(), inputs.end(), [&](const auto& a, const auto& b) {
    int c = order->compare(a.front().m, b.front().m);
    return c != 0 ? c < 0 : a.size() < b.size();
  });
  Buchberger bb(*order, p, budget);
  for (auto& f : inputs) bb.add_input(std::move(f));
  bb.run();
  std::vector<MultiPoly> out;
  for (auto& g : bb.reduced()) out.push_back(MultiPoly::from_sorted(ring, order, std::move(g)));
  if (stats) *stats = bb.stats();
  return out;
}

MultiPoly reduce_full(const MultiPoly& f, const std::vector<MultiPoly>& basis) {
  std::vector<Element> elems;
  elems.reserve(basis.size());
  for (const auto& g : basis) {
    if (g.is_zero()) continue;
    Element e;
    e.terms = g.monic().terms();
    e.lm = e.terms.front().m;
    e.mask = e.lm.support_mask();
    elems.push_back(std::move(e));
  }
  std::vector<const Element*> divisors;
  for (const auto& e : elems) divisors.push_back(&e);
  Reducer r(*f.order(), f.modulus());
  return MultiPoly::from_sorted(f.ring(), f.order(), r.reduce(f.terms(), divisors));
}

}  // namespace frobgrow
