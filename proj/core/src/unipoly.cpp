#include "frobgrow/unipoly.hpp"

#include <algorithm>
#include <stdexcept>

#include "frobgrow/errors.hpp"

namespace frobgrow {

UniPoly::UniPoly(PrimeModulus p, std::vector<std::uint32_t> coeffs) : p_(p), c_(std::move(coeffs)) {
  for (auto& c : c_) c %= p_.value();
  trim();
}

UniPoly UniPoly::from_ints(PrimeModulus p, const std::vector<std::int64_t>& coeffs) {
  std::vector<std::uint32_t> c(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) c[i] = p.reduce(coeffs[i]);
  return UniPoly(p, std::move(c));
}

UniPoly UniPoly::constant(PrimeModulus p, std::uint32_t c) { return UniPoly(p, {c}); }

UniPoly UniPoly::monomial(PrimeModulus p, std::uint32_t c, std::size_t degree) {
  std::vector<std::uint32_t> v(degree + 1, 0);
  v[degree] = c;
  return UniPoly(p, std::move(v));
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::monic() const {
  if (is_zero() || lead() == 1) return *this;
  return scaled(p_.inv(lead()));
}

UniPoly UniPoly::scaled(std::uint32_t c) const {
  UniPoly r(p_);
  c %= p_.value();
  if (c == 0) return r;
  r.c_.resize(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = p_.mul(c_[i], c);
  return r;
}

UniPoly UniPoly::shifted(std::size_t k) const {
  if (is_zero()) return *this;
  UniPoly r(p_);
  r.c_.assign(k, 0);
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

UniPoly UniPoly::derivative() const {
  UniPoly r(p_);
  if (c_.size() <= 1) return r;
  r.c_.resize(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = p_.mul(c_[i], static_cast<std::uint32_t>(i % p_.value()));
  r.trim();
  return r;
}

UniPoly UniPoly::pow(std::uint64_t e) const {
  UniPoly result = constant(p_, 1);
  UniPoly base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

std::uint32_t UniPoly::eval(std::uint32_t x) const {
  std::uint32_t acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = p_.add(p_.mul(acc, x), *it);
  return acc;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  require_same_modulus(p_, o.p_);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = p_.add(c_[i], o.c_[i]);
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  require_same_modulus(p_, o.p_);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = p_.sub(c_[i], o.c_[i]);
  trim();
  return *this;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.c_) c = p_.neg(c);
  return r;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  require_same_modulus(a.p_, b.p_);
  UniPoly r(a.p_);
  if (a.is_zero() || b.is_zero()) return r;
  const std::uint64_t p = a.p_.value();
  // Number of products (each < (p-1)^2) that fit in an unsigned 64-bit accumulator.
  const std::uint64_t sq = (p - 1) * (p - 1);
  const std::uint64_t batch = sq == 0 ? ~0ULL : (~0ULL - p) / sq;
  std::vector<std::uint64_t> acc(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    const std::uint64_t ai = a.c_[i];
    if (ai != 0)
      for (std::size_t j = 0; j < b.c_.size(); ++j) acc[i + j] += ai * b.c_[j];
    // Each slot receives at most one product per row.
    if ((i + 1) % batch == 0)
      for (auto& v : acc) v %= p;
  }
  r.c_.resize(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) r.c_[i] = static_cast<std::uint32_t>(acc[i] % p);
  r.trim();
  return r;
}

std::string UniPoly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    std::uint32_t c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c) + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

bool canonical_less(const UniPoly& a, const UniPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    auto ca = a.coeff(static_cast<std::size_t>(i)), cb = b.coeff(static_cast<std::size_t>(i));
    if (ca != cb) return ca < cb;
  }
  return false;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  require_same_modulus(a.modulus(), b.modulus());
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const PrimeModulus& p = a.modulus();
  if (a.degree() < b.degree()) return {UniPoly(p), a};
  std::vector<std::uint32_t> rem = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  const std::uint32_t inv_lead = p.inv(b.lead());
  std::vector<std::uint32_t> quot(rem.size() - db, 0);
  for (std::size_t k = quot.size(); k-- > 0;) {
    std::uint32_t c = rem[k + db];
    if (c == 0) continue;
    c = p.mul(c, inv_lead);
    quot[k] = c;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] = p.sub(rem[k + j], p.mul(c, bc[j]));
  }
  rem.resize(db);
  return {UniPoly(p, std::move(quot)), UniPoly(p, std::move(rem))};
}

UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

bool divides(const UniPoly& d, const UniPoly& a) {
  if (d.is_zero()) return a.is_zero();
  return (a % d).is_zero();
}

UniPoly uni_gcd(const UniPoly& a, const UniPoly& b) {
  require_same_modulus(a.modulus(), b.modulus());
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UniPoly uni_lcm(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) throw InputError("lcm of a zero polynomial");
  UniPoly g = uni_gcd(a, b);
  return (exact_div(a, g) * b).monic();
}

UniPoly mulmod(const UniPoly& a, const UniPoly& b, const UniPoly& m) { return (a * b) % m; }

UniPoly powmod(const UniPoly& base, std::uint64_t e, const UniPoly& m) {
  UniPoly result = UniPoly::constant(base.modulus(), 1) % m;
  UniPoly b = base % m;
  while (e) {
    if (e & 1) result = mulmod(result, b, m);
    e >>= 1;
    if (e) b = mulmod(b, b, m);
  }
  return result;
}

}  // namespace frobgrow
