#include "frobgrow/ideal.hpp"

#include <map>
#include <mutex>

#include "frobgrow/buchberger.hpp"
#include "frobgrow/parser.hpp"

namespace frobgrow {

struct Ideal::Cache {
  struct Entry {
    std::mutex m;
    bool ready = false;
    std::vector<MultiPoly> basis;
  };
  std::mutex m;
  std::map<std::string, std::shared_ptr<Entry>> entries;

  std::shared_ptr<Entry> entry(const std::string& key) {
    std::lock_guard lock(m);
    auto& e = entries[key];
    if (!e) e = std::make_shared<Entry>();
    return e;
  }
};

Ideal::Ideal(RingSpecPtr ring, std::vector<MultiPoly> generators) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    require_same_ring(*ring_->ring(), *g.ring());
    if (!g.is_zero()) gens_.push_back(g.with_order(ring_->ring()->default_order()));
  }
}

std::vector<MultiPoly> Ideal::all_generators() const {
  std::vector<MultiPoly> all = gens_;
  for (const auto& r : ring_->relations()) all.push_back(r);
  return all;
}

const std::vector<MultiPoly>& Ideal::basis(const OrderPtr& order, const Budget& budget) const {
  auto entry = cache_->entry(order->key());
  std::lock_guard lock(entry->m);
  if (!entry->ready) {
    entry->basis = reduced_groebner_basis(all_generators(), ring(), order, budget);
    entry->ready = true;
  }
  return entry->basis;
}

bool Ideal::has_cached_basis(const OrderPtr& order) const {
  auto entry = cache_->entry(order->key());
  std::lock_guard lock(entry->m);
  return entry->ready;
}

void Ideal::seed_basis(const OrderPtr& order, std::vector<MultiPoly> basis) const {
  auto entry = cache_->entry(order->key());
  std::lock_guard lock(entry->m);
  if (entry->ready) return;
  entry->basis = std::move(basis);
  entry->ready = true;
}

bool Ideal::is_unit() const {
  const auto& b = basis();
  return b.size() == 1 && b.front().is_constant() && !b.front().is_zero();
}

bool Ideal::is_zero() const { return basis().empty(); }

std::string Ideal::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ", ";
    out += gens_[i].to_string();
  }
  return out + ")";
}

Ideal make_ideal(const RingSpecPtr& ring, const std::vector<std::string>& exprs) {
  std::vector<MultiPoly> gens;
  for (const auto& e : exprs) gens.push_back(parse_poly(e, *ring));
  return Ideal(ring, std::move(gens));
}

}  // namespace frobgrow
