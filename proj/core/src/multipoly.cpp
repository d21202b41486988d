#include "frobgrow/multipoly.hpp"

#include <algorithm>
#include <stdexcept>

#include "frobgrow/errors.hpp"

namespace frobgrow {

namespace kernel {

std::vector<Term> axpy(const std::vector<Term>& f, std::size_t fi, const std::vector<Term>& g, std::size_t gi,
                       const Monomial& m, std::uint32_t c, const MonomialOrder& order, const PrimeModulus& p) {
  std::vector<Term> out;
  out.reserve(f.size() - fi + (c ? g.size() - gi : 0));
  if (c == 0) {
    out.assign(f.begin() + static_cast<std::ptrdiff_t>(fi), f.end());
    return out;
  }
  const bool unit_mono = m.is_one();
  std::size_t i = fi, j = gi;
  Term gt{};
  auto load = [&](std::size_t k) {
    gt.m = unit_mono ? g[k].m : g[k].m * m;
    gt.c = p.mul(g[k].c, c);
  };
  if (j < g.size()) load(j);
  while (i < f.size() && j < g.size()) {
    int cmp = order.compare(f[i].m, gt.m);
    if (cmp > 0) {
      out.push_back(f[i++]);
    } else if (cmp < 0) {
      out.push_back(gt);
      if (++j < g.size()) load(j);
    } else {
      std::uint32_t s = p.add(f[i].c, gt.c);
      if (s) out.push_back({f[i].m, s});
      ++i;
      if (++j < g.size()) load(j);
    }
  }
  for (; i < f.size(); ++i) out.push_back(f[i]);
  while (j < g.size()) {
    out.push_back(gt);
    if (++j < g.size()) load(j);
  }
  return out;
}

void sort_terms(std::vector<Term>& terms, const MonomialOrder& order, const PrimeModulus& p) {
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) { return order.compare(a.m, b.m) > 0; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (const auto& t : terms) {
    if (!out.empty() && out.back().m == t.m) {
      out.back().c = p.add(out.back().c, t.c % p.value());
    } else {
      out.push_back({t.m, t.c % p.value()});
    }
    if (out.back().c == 0) out.pop_back();
  }
  terms = std::move(out);
}

}  // namespace kernel

namespace {

void require_compatible(const MultiPoly& a, const MultiPoly& b) {
  require_same_ring(*a.ring(), *b.ring());
  if (a.order() != b.order() && !(*a.order() == *b.order()))
    throw ModulusMismatch("polynomials are sorted under different monomial orders");
}

std::vector<Term> add_terms(const std::vector<Term>& a, const std::vector<Term>& b, const MonomialOrder& o,
                            const PrimeModulus& p) {
  Monomial one(a.empty() ? (b.empty() ? 0 : b[0].m.size()) : a[0].m.size());
  return kernel::axpy(a, 0, b, 0, one, 1, o, p);
}

}  // namespace

MultiPoly::MultiPoly(PolyRingPtr ring) : ring_(std::move(ring)) { order_ = ring_->default_order(); }

MultiPoly::MultiPoly(PolyRingPtr ring, OrderPtr order) : ring_(std::move(ring)), order_(std::move(order)) {
  if (order_->nvars() != ring_->nvars()) throw InputError("monomial order does not match the ring");
}

MultiPoly MultiPoly::constant(PolyRingPtr ring, std::uint32_t c) {
  MultiPoly r(ring);
  c %= ring->modulus().value();
  if (c) r.terms_.push_back({Monomial(ring->nvars()), c});
  return r;
}

MultiPoly MultiPoly::variable(PolyRingPtr ring, std::size_t index) {
  Monomial m(ring->nvars());
  m.set(index, 1);
  return term(std::move(ring), m, 1);
}

MultiPoly MultiPoly::term(PolyRingPtr ring, const Monomial& m, std::uint32_t c) {
  MultiPoly r(ring);
  c %= ring->modulus().value();
  if (c) r.terms_.push_back({m, c});
  return r;
}

MultiPoly MultiPoly::from_terms(PolyRingPtr ring, OrderPtr order, std::vector<Term> terms) {
  MultiPoly r(std::move(ring), std::move(order));
  kernel::sort_terms(terms, *r.order_, r.modulus());
  r.terms_ = std::move(terms);
  return r;
}

MultiPoly MultiPoly::from_sorted(PolyRingPtr ring, OrderPtr order, std::vector<Term> terms) {
  MultiPoly r(std::move(ring), std::move(order));
  r.terms_ = std::move(terms);
  return r;
}

std::uint32_t MultiPoly::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.m.total_degree());
  return d;
}

std::uint32_t MultiPoly::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max<std::uint32_t>(d, t.m[var]);
  return d;
}

MultiPoly MultiPoly::with_order(OrderPtr order) const {
  if (order == order_ || *order == *order_) {
    MultiPoly r = *this;
    r.order_ = std::move(order);
    return r;
  }
  return from_terms(ring_, std::move(order), terms_);
}

MultiPoly MultiPoly::monic() const {
  if (is_zero() || lead().c == 1) return *this;
  return scaled(modulus().inv(lead().c));
}

MultiPoly MultiPoly::scaled(std::uint32_t c) const {
  MultiPoly r(ring_, order_);
  c %= modulus().value();
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.c = modulus().mul(t.c, c);
  return r;
}

MultiPoly MultiPoly::mul_term(const Monomial& m, std::uint32_t c) const {
  MultiPoly r(ring_, order_);
  c %= modulus().value();
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.m * m, modulus().mul(t.c, c)});
  return r;
}

MultiPoly MultiPoly::pow(std::uint64_t e) const {
  MultiPoly result = constant(ring_, 1).with_order(order_);
  MultiPoly base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  require_compatible(*this, o);
  terms_ = add_terms(terms_, o.terms_, *order_, modulus());
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  require_compatible(*this, o);
  if (o.is_zero()) return *this;
  terms_ = kernel::axpy(terms_, 0, o.terms_, 0, Monomial(ring_->nvars()), modulus().value() - 1, *order_, modulus());
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  require_compatible(a, b);
  MultiPoly r(a.ring_, a.order_);
  if (a.is_zero() || b.is_zero()) return r;
  const MultiPoly& outer = a.size() <= b.size() ? a : b;
  const MultiPoly& inner = a.size() <= b.size() ? b : a;
  const PrimeModulus& p = a.modulus();
  std::vector<std::vector<Term>> rows;
  rows.reserve(outer.size());
  for (const auto& t : outer.terms_) {
    std::vector<Term> row;
    row.reserve(inner.size());
    for (const auto& s : inner.terms_) row.push_back({s.m * t.m, p.mul(s.c, t.c)});
    rows.push_back(std::move(row));
  }
  while (rows.size() > 1) {
    std::vector<std::vector<Term>> next;
    next.reserve((rows.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < rows.size(); i += 2) next.push_back(add_terms(rows[i], rows[i + 1], *a.order_, p));
    if (rows.size() % 2) next.push_back(std::move(rows.back()));
    rows = std::move(next);
  }
  r.terms_ = std::move(rows.front());
  return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.ring_ != b.ring_ && !(*a.ring_ == *b.ring_)) return false;
  if (a.order_ != b.order_ && !(*a.order_ == *b.order_)) return false;
  return a.terms_ == b.terms_;
}

std::string MultiPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += '+';
    std::string mono;
    for (std::size_t v = 0; v < ring_->nvars(); ++v) {
      if (t.m[v] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += ring_->name(v);
      if (t.m[v] > 1) mono += "^" + std::to_string(t.m[v]);
    }
    if (mono.empty()) {
      out += std::to_string(t.c);
    } else {
      if (t.c != 1) out += std::to_string(t.c) + "*";
      out += mono;
    }
  }
  return out;
}

MultiPoly multi_arith(const MultiPoly& a, const MultiPoly& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
  }
  throw std::logic_error("unknown arithmetic operation");
}

MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b) {
  require_compatible(a, b);
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  const PrimeModulus& p = a.modulus();
  const auto& order = *a.order();
  const Term lb = b.lead();
  const std::uint32_t inv = p.inv(lb.c);
  std::vector<Term> rem = a.terms();
  std::vector<Term> quot;
  while (!rem.empty()) {
    if (!lb.m.divides(rem.front().m)) throw std::domain_error("inexact multivariate division");
    Monomial m = rem.front().m / lb.m;
    std::uint32_t c = p.mul(rem.front().c, inv);
    quot.push_back({m, c});
    rem = kernel::axpy(rem, 1, b.terms(), 1, m, p.neg(c), order, p);
  }
  return MultiPoly::from_sorted(a.ring(), a.order(), std::move(quot));
}

std::optional<unsigned> weighted_degree(const MultiPoly& f) {
  std::optional<unsigned> deg;
  const auto& ring = *f.ring();
  for (const auto& t : f.terms()) {
    unsigned d = 0;
    for (std::size_t v = 0; v < ring.nvars(); ++v) d += ring.weight(v) * t.m[v];
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg.value_or(0);
}

MultiPoly from_uni(const UniPoly& u, const PolyRingPtr& ring, std::size_t var) {
  require_same_modulus(u.modulus(), ring->modulus());
  std::vector<Term> terms;
  for (std::size_t i = 0; i < u.coeffs().size(); ++i) {
    if (u.coeffs()[i] == 0) continue;
    Monomial m(ring->nvars());
    m.set(var, static_cast<std::uint32_t>(i));
    terms.push_back({m, u.coeffs()[i]});
  }
  return MultiPoly::from_terms(ring, ring->default_order(), std::move(terms));
}

UniPoly to_uni(const MultiPoly& f, std::size_t var) {
  std::vector<std::uint32_t> c(f.degree_in(var) + 1, 0);
  for (const auto& t : f.terms()) {
    for (std::size_t v = 0; v < f.ring()->nvars(); ++v)
      if (v != var && t.m[v]) throw InputError("polynomial involves more than the coefficient variable");
    c[t.m[var]] = t.c;
  }
  return UniPoly(f.modulus(), std::move(c));
}

bool only_involves(const MultiPoly& f, const std::vector<std::size_t>& allowed) {
  std::uint32_t mask = 0;
  for (auto v : allowed) mask |= 1u << v;
  for (const auto& t : f.terms())
    if (t.m.support_mask() & ~mask) return false;
  return true;
}

MultiPoly change_ring(const MultiPoly& f, const PolyRingPtr& target) {
  require_same_modulus(f.modulus(), target->modulus());
  std::vector<Term> terms;
  terms.reserve(f.size());
  const std::size_t n = target->nvars();
  for (const auto& t : f.terms()) {
    Monomial m(n);
    for (std::size_t v = 0; v < kMaxVars; ++v) {
      if (v < n) {
        m.set(v, t.m[v]);
      } else if (t.m[v]) {
        throw InputError("polynomial involves a variable missing from the target ring");
      }
    }
    terms.push_back({m, t.c});
  }
  return MultiPoly::from_terms(target, target->default_order(), std::move(terms));
}

}  // namespace frobgrow
