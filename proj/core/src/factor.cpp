#include "frobgrow/factor.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "frobgrow/errors.hpp"

namespace frobgrow {
namespace {

// p-th root of a polynomial whose derivative vanishes: f(t) = g(t^p), and over
// F_p every coefficient is its own p-th power.
UniPoly pth_root(const UniPoly& f) {
  const std::size_t p = f.modulus().value();
  std::vector<std::uint32_t> c;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) c.push_back(f.coeffs()[i]);
  return UniPoly(f.modulus(), std::move(c));
}

// t^(p^k) mod f by k successive Frobenius powers.
UniPoly frobenius_iterate(const UniPoly& base, unsigned k, const UniPoly& f) {
  UniPoly r = base % f;
  for (unsigned i = 0; i < k; ++i) r = powmod(r, f.modulus().value(), f);
  return r;
}

// Distinct-degree factorization of a monic squarefree polynomial.
std::vector<std::pair<UniPoly, unsigned>> distinct_degree(UniPoly f) {
  std::vector<std::pair<UniPoly, unsigned>> out;
  const PrimeModulus& p = f.modulus();
  const UniPoly t = UniPoly::var(p);
  UniPoly h = t % f;
  for (unsigned d = 1; 2 * d <= static_cast<unsigned>(f.degree()); ++d) {
    h = powmod(h, p.value(), f);
    UniPoly g = uni_gcd(h - t, f);
    if (!g.is_one()) {
      out.emplace_back(g, d);
      f = exact_div(f, g);
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f, static_cast<unsigned>(f.degree()));
  return out;
}

UniPoly random_poly(const PrimeModulus& p, int degree_below, std::mt19937_64& rng) {
  std::vector<std::uint32_t> c(static_cast<std::size_t>(degree_below));
  for (auto& x : c) x = static_cast<std::uint32_t>(rng() % p.value());
  return UniPoly(p, std::move(c));
}

// Splits a monic product of distinct irreducibles all of degree d.
void equal_degree(const UniPoly& f, unsigned d, std::mt19937_64& rng, std::vector<UniPoly>& out) {
  const int n = f.degree();
  if (n <= static_cast<int>(d)) {
    out.push_back(f);
    return;
  }
  const PrimeModulus& p = f.modulus();
  for (;;) {
    UniPoly a = random_poly(p, n, rng);
    if (a.degree() < 1) continue;
    UniPoly b(p);
    if (p.value() == 2) {
      // Trace map a + a^2 + ... + a^(2^(d-1)).
      UniPoly term = a % f;
      b = term;
      for (unsigned i = 1; i < d; ++i) {
        term = mulmod(term, term, f);
        b += term;
      }
    } else {
      // a^((p^d-1)/2) = (a^(1+p+...+p^(d-1)))^((p-1)/2).
      UniPoly norm = UniPoly::constant(p, 1);
      UniPoly frob = a % f;
      for (unsigned i = 0; i < d; ++i) {
        norm = mulmod(norm, frob, f);
        if (i + 1 < d) frob = powmod(frob, p.value(), f);
      }
      b = powmod(norm, (p.value() - 1) / 2, f) - UniPoly::constant(p, 1);
    }
    UniPoly g = uni_gcd(b, f);
    if (g.degree() > 0 && g.degree() < n) {
      equal_degree(g, d, rng, out);
      equal_degree(exact_div(f, g), d, rng, out);
      return;
    }
  }
}

std::vector<unsigned> prime_divisors(unsigned n) {
  std::vector<unsigned> r;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    r.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) r.push_back(n);
  return r;
}

}  // namespace

std::vector<std::pair<UniPoly, unsigned>> squarefree_decomposition(const UniPoly& f_in) {
  std::vector<std::pair<UniPoly, unsigned>> out;
  UniPoly f = f_in.monic();
  if (f.degree() < 1) return out;
  const unsigned p = f.modulus().value();
  UniPoly c = uni_gcd(f, f.derivative());
  UniPoly w = exact_div(f, c);
  unsigned i = 1;
  while (!w.is_one()) {
    UniPoly y = uni_gcd(w, c);
    UniPoly fac = exact_div(w, y);
    if (fac.degree() > 0) out.emplace_back(fac, i);
    w = y;
    c = exact_div(c, y);
    ++i;
  }
  if (c.degree() > 0) {
    for (auto& [g, m] : squarefree_decomposition(pth_root(c))) out.emplace_back(g, m * p);
  }
  return out;
}

FactorList uni_factor(const UniPoly& a, std::uint64_t seed) {
  if (a.is_zero()) throw InputError("cannot factor the zero polynomial");
  FactorList result;
  result.unit = a.lead();
  std::mt19937_64 rng(seed);
  std::map<std::vector<std::uint32_t>, std::pair<UniPoly, unsigned>> merged;
  for (const auto& [sqf, mult] : squarefree_decomposition(a)) {
    for (const auto& [block, d] : distinct_degree(sqf)) {
      std::vector<UniPoly> pieces;
      equal_degree(block, d, rng, pieces);
      for (auto& piece : pieces) {
        auto [it, inserted] = merged.try_emplace(piece.coeffs(), piece, 0u);
        it->second.second += mult;
      }
    }
  }
  for (auto& [key, entry] : merged) result.factors.push_back(std::move(entry));
  std::sort(result.factors.begin(), result.factors.end(),
            [](const auto& x, const auto& y) { return canonical_less(x.first, y.first); });
  return result;
}

bool is_irreducible(const UniPoly& f_in) {
  if (f_in.degree() < 1) return false;
  UniPoly f = f_in.monic();
  const unsigned n = static_cast<unsigned>(f.degree());
  const UniPoly t = UniPoly::var(f.modulus());
  if (!(frobenius_iterate(t, n, f) - t % f).is_zero()) return false;
  for (unsigned r : prime_divisors(n)) {
    UniPoly h = frobenius_iterate(t, n / r, f) - t;
    if (!uni_gcd(h, f).is_one()) return false;
  }
  return true;
}

UniPoly FactorList::expand(PrimeModulus p) const {
  UniPoly r = UniPoly::constant(p, unit);
  for (const auto& [f, m] : factors) r = r * f.pow(m);
  return r;
}

unsigned FactorList::max_multiplicity() const {
  unsigned m = 0;
  for (const auto& f : factors) m = std::max(m, f.second);
  return m;
}

std::string FactorList::to_string(std::string_view var) const {
  std::string out;
  if (unit != 1 || factors.empty()) out = std::to_string(unit);
  for (const auto& [f, m] : factors) {
    if (!out.empty()) out += "*";
    out += "(" + f.to_string(var) + ")";
    if (m > 1) out += "^" + std::to_string(m);
  }
  return out;
}

}  // namespace frobgrow
