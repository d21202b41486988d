#include <gtest/gtest.h>

#include <map>
#include <random>

#include "frobgrow/errors.hpp"
#include "frobgrow/factor.hpp"
#include "frobgrow/frobenius.hpp"
#include "frobgrow/groebner.hpp"
#include "frobgrow/modulus.hpp"
#include "frobgrow/multipoly.hpp"
#include "frobgrow/parser.hpp"
#include "helpers.hpp"

using namespace frobgrow;
using namespace frobgrow::testing;

namespace {

// P_n for r = (1, t, 1) straight from the three-term recurrence.
UniPoly simple_p(std::uint64_t p, int n) {
  PrimeModulus m(p);
  UniPoly a = UniPoly::constant(m, 1), b = UniPoly::var(m);
  if (n == 0) return a;
  for (int i = 1; i < n; ++i) {
    UniPoly c = UniPoly::var(m) * b - a;
    a = b;
    b = c;
  }
  return b;
}

// Irreducibility by trial division against every monic polynomial of degree
// 1..deg/2; only used for small degrees.
bool brute_irreducible(const UniPoly& f) {
  const auto p = f.modulus();
  const int n = f.degree();
  if (n < 1) return false;
  for (int d = 1; 2 * d <= n; ++d) {
    std::vector<std::uint32_t> c(d + 1, 0);
    c[d] = 1;
    for (;;) {
      if (divides(UniPoly(p, c), f)) return false;
      int i = 0;
      while (i < d && ++c[i] == p.value()) c[i++] = 0;
      if (i == d) break;
    }
  }
  return true;
}

MultiPoly random_multi(std::mt19937_64& rng, const PolyRingPtr& r, int terms, int max_exp) {
  std::vector<Term> ts;
  for (int i = 0; i < terms; ++i) {
    Monomial m(r->nvars());
    for (std::size_t v = 0; v < r->nvars(); ++v) m.set(v, static_cast<std::uint32_t>(rng() % (max_exp + 1)));
    ts.push_back({m, static_cast<std::uint32_t>(rng() % r->modulus().value())});
  }
  std::erase_if(ts, [](const Term& t) { return t.c == 0; });
  return MultiPoly::from_terms(r, r->default_order(), ts);
}

Monomial mono(const PolyRingPtr& r, std::vector<unsigned> e) {
  Monomial m(r->nvars());
  for (std::size_t i = 0; i < e.size(); ++i) m.set(i, e[i]);
  return m;
}

}  // namespace

TEST(Modulus, RejectsNonPrimesAndRange) {
  EXPECT_THROW(PrimeModulus(4), InputError);
  EXPECT_THROW(PrimeModulus(1), InputError);
  EXPECT_THROW(PrimeModulus(0), InputError);
  EXPECT_THROW(PrimeModulus(1ULL << 31), InputError);
  EXPECT_NO_THROW(PrimeModulus(2147483647ULL));
  try {
    PrimeModulus bad(4);
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("4 is not prime"), std::string::npos);
  }
}

TEST(Modulus, PrimePowerExactAndOverflow) {
  PrimeModulus p(3);
  EXPECT_EQ(PrimePower::make(p, 4).q, 81u);
  EXPECT_EQ(PrimePower::make(p, 0).q, 1u);
  EXPECT_THROW(PrimePower::make(p, 60), InputError);
  EXPECT_EQ(PrimePower::from_value(p, 27).e, 3u);
  EXPECT_THROW(PrimePower::from_value(p, 12), InputError);
}

TEST(Modulus, InverseRoundTrip) {
  for (std::uint64_t q : {2ULL, 3ULL, 7ULL, 65537ULL, 2147483647ULL}) {
    PrimeModulus p(q);
    for (std::uint32_t a : {1u, 2u, static_cast<std::uint32_t>(q - 1)}) {
      if (a >= q) continue;
      EXPECT_EQ(p.mul(a, p.inv(a)), 1u);
    }
  }
}

TEST(UniGcd, Examples) {
  EXPECT_EQ(uni_gcd(uni(2, "t^2+1"), uni(2, "t+1")), uni(2, "t+1"));
  EXPECT_EQ(uni_gcd(uni(5, "t"), uni(5, "1")), uni(5, "1"));
  EXPECT_EQ(simple_p(2, 2), uni(2, "(t+1)^2"));
  EXPECT_EQ(simple_p(2, 4), uni(2, "(t^2+t+1)^2"));
  EXPECT_EQ(uni_gcd(simple_p(2, 2), simple_p(2, 4)), uni(2, "1"));
  EXPECT_TRUE(uni_gcd(UniPoly(PrimeModulus(3)), UniPoly(PrimeModulus(3))).is_zero());
  EXPECT_THROW(uni_gcd(uni(2, "t"), uni(3, "t")), ModulusMismatch);
}

TEST(UniLcm, Examples) {
  EXPECT_EQ(uni_lcm(uni(7, "t"), uni(7, "t+1")), uni(7, "t^2+t"));
  EXPECT_EQ(uni_lcm(uni(7, "t^2"), uni(7, "t")), uni(7, "t^2"));
  EXPECT_EQ(uni_lcm(simple_p(3, 1), simple_p(3, 2)), uni(3, "t^3+2*t"));
  EXPECT_THROW(uni_lcm(uni(3, "0"), uni(3, "t")), InputError);
}

TEST(UniGcd, DividesAndLcmIdentity) {
  std::mt19937_64 rng(11);
  for (std::uint64_t p : {2, 3, 5, 7}) {
    PrimeModulus m(p);
    for (int it = 0; it < 100; ++it) {
      UniPoly common = random_uni(rng, m, 4);
      UniPoly a = random_uni(rng, m, 12) * common, b = random_uni(rng, m, 12) * common;
      UniPoly g = uni_gcd(a, b);
      EXPECT_TRUE(divides(g, a));
      EXPECT_TRUE(divides(g, b));
      EXPECT_TRUE(divides(common.monic(), g));
      EXPECT_EQ(uni_lcm(a, b) * g, (a * b).monic());
    }
  }
}

TEST(UniPoly, TextForm) {
  EXPECT_EQ(uni(2, "t^6+t^4+1").to_string(), "t^6+t^4+1");
  EXPECT_EQ(uni(5, "t^2-1").to_string(), "t^2+4");
  EXPECT_EQ(uni(5, "2*t").to_string(), "2*t");
  EXPECT_EQ(uni(5, "0").to_string(), "0");
  EXPECT_THROW(exact_div(uni(5, "t^2+1"), uni(5, "t")), std::domain_error);
}

TEST(UniFactor, Examples) {
  EXPECT_EQ(uni_factor(uni(2, "t^2+1"), 1).to_string(), "(t+1)^2");
  EXPECT_EQ(uni_factor(uni(5, "t^2+1"), 1).to_string(), "(t+2)*(t+3)");
  auto f = uni_factor(uni(2, "t^6+t^4+1"), 1);
  ASSERT_EQ(f.factors.size(), 1u);
  EXPECT_EQ(f.factors[0].first, uni(2, "t^3+t^2+1"));
  EXPECT_EQ(f.factors[0].second, 2u);
  EXPECT_TRUE(brute_irreducible(uni(2, "t^3+t^2+1")));
  EXPECT_THROW(uni_factor(uni(3, "0"), 1), InputError);
  auto c = uni_factor(uni(7, "3"), 1);
  EXPECT_EQ(c.unit, 3u);
  EXPECT_TRUE(c.factors.empty());
}

TEST(UniFactor, RoundTripAndIrreducibility) {
  std::mt19937_64 rng(2024);
  for (std::uint64_t p : {2, 3, 5, 7}) {
    PrimeModulus m(p);
    for (int it = 0; it < 125; ++it) {
      UniPoly a = random_uni(rng, m, 40);
      // Bias towards repeated factors now and then.
      if (it % 5 == 0) a = a * random_uni(rng, m, 4).pow(static_cast<std::uint64_t>(p));
      if (a.degree() > 40) continue;
      FactorList fl = uni_factor(a, rng());
      ASSERT_EQ(fl.expand(m), a) << a.to_string();
      for (std::size_t i = 0; i < fl.factors.size(); ++i) {
        const UniPoly& tau = fl.factors[i].first;
        EXPECT_EQ(tau.lead(), 1u);
        if (i > 0) EXPECT_TRUE(canonical_less(fl.factors[i - 1].first, tau));
        const UniPoly t = UniPoly::var(m);
        UniPoly frob = t;
        for (int d = 1; d < tau.degree(); ++d) {
          frob = powmod(frob, p, tau);
          UniPoly g = uni_gcd(frob - t, tau);
          EXPECT_TRUE(g.is_one() || g == tau) << tau.to_string() << " d=" << d;
        }
        if (tau.degree() <= 8 && p <= 3) {
          EXPECT_TRUE(brute_irreducible(tau));
        }
      }
    }
  }
}

TEST(UniFactor, SeedDoesNotChangeResult) {
  UniPoly a = uni(3, "(t^2+1)*(t^2+t+2)*(t^2+2*t+2)*(t+1)^3");
  auto a1 = uni_factor(a, 1), a2 = uni_factor(a, 999);
  EXPECT_EQ(a1.to_string(), a2.to_string());
  EXPECT_EQ(a1.factors.size(), 4u);
}

TEST(Irreducible, AgreesWithBruteForce) {
  for (std::uint64_t p : {2, 3}) {
    PrimeModulus m(p);
    std::mt19937_64 rng(p);
    for (int it = 0; it < 200; ++it) {
      UniPoly f = random_uni(rng, m, 7).monic();
      if (f.degree() < 1) continue;
      EXPECT_EQ(is_irreducible(f), brute_irreducible(f)) << f.to_string();
    }
  }
}

TEST(Parse, KatzmanExpansion) {
  auto r = poly_ring(5, {{"t", 0}, {"x", 1}, {"y", 1}});
  MultiPoly f = parse_poly("x*y*(x-y)*(x-t*y)", r);
  MultiPoly expect = MultiPoly::from_terms(
      r, r->default_order(),
      {{mono(r, {0, 3, 1}), 1}, {mono(r, {0, 2, 2}), 4}, {mono(r, {1, 2, 2}), 4}, {mono(r, {1, 1, 3}), 1}});
  EXPECT_EQ(f, expect);
  EXPECT_EQ(weighted_degree(f), 4u);
}

TEST(Parse, ThreeTermQuadric) {
  auto r = poly_ring(3, {{"t", 0}, {"x", 1}, {"y", 1}});
  MultiPoly f = parse_poly("x^2 + t*x*y + y^2", r);
  EXPECT_EQ(f.size(), 3u);
  EXPECT_EQ(weighted_degree(f), 2u);
}

TEST(Parse, ErrorsCarryColumns) {
  auto r = poly_ring(3, {{"t", 0}, {"x", 1}, {"y", 1}});
  auto column_of = [&](const std::string& s) -> std::size_t {
    try {
      parse_poly(s, r);
    } catch (const ParseError& e) {
      return e.column();
    }
    return 0;
  };
  EXPECT_EQ(column_of("x**2"), 3u);
  EXPECT_EQ(column_of("x + q"), 5u);
  EXPECT_EQ(column_of("x^-2"), 3u);
  EXPECT_GT(column_of("x^70000"), 0u);
  EXPECT_GT(column_of(""), 0u);
  EXPECT_GT(column_of("(x+y"), 0u);
  EXPECT_THROW(parse_poly("x $ y", r), ParseError);
}

TEST(Parse, CoefficientsReduced) {
  auto r = poly_ring(7, {{"x", 1}});
  EXPECT_EQ(parse_poly("15*x - 1", r).to_string(), "x+6");
  EXPECT_EQ(parse_poly("  ( x + 1 ) ^ 0 ", r).to_string(), "1");
  EXPECT_EQ(parse_poly("7*x", r).to_string(), "0");
}

TEST(Parse, PrintParseRoundTrip) {
  std::mt19937_64 rng(7);
  for (std::uint64_t p : {2, 3, 5, 7}) {
    auto r = poly_ring(p, {{"t", 0}, {"u", 1}, {"x", 1}, {"y", 1}});
    for (int it = 0; it < 50; ++it) {
      MultiPoly f = random_multi(rng, r, 1 + static_cast<int>(rng() % 8), 4);
      MultiPoly g = parse_poly(f.to_string(), r);
      EXPECT_EQ(f, g);
      EXPECT_EQ(f.to_string(), g.to_string());
    }
  }
}

TEST(WeightedDegree, Examples) {
  auto r = poly_ring(3, {{"t", 0}, {"x", 1}, {"y", 1}});
  EXPECT_EQ(weighted_degree(parse_poly("x^2+t*x*y+y^2", r)), 2u);
  EXPECT_EQ(weighted_degree(parse_poly("t^5", r)), 0u);
  EXPECT_FALSE(weighted_degree(parse_poly("x + t", r)).has_value());
}

TEST(MultiArith, Examples) {
  auto r2 = poly_ring(2, {{"x", 1}, {"y", 1}});
  auto s = parse_poly("x+y", r2);
  EXPECT_EQ(multi_arith(s, s, ArithOp::mul), parse_poly("x^2+y^2", r2));
  auto r = poly_ring(5, {{"t", 0}, {"x", 1}, {"y", 1}});
  EXPECT_EQ(multi_arith(parse_poly("x-y", r), parse_poly("x-t*y", r), ArithOp::mul),
            MultiPoly::from_terms(r, r->default_order(),
                                  {{mono(r, {0, 2, 0}), 1}, {mono(r, {0, 1, 1}), 4}, {mono(r, {1, 1, 1}), 4},
                                   {mono(r, {1, 0, 2}), 1}}));
  EXPECT_TRUE(multi_arith(parse_poly("x", r), MultiPoly(r), ArithOp::mul).is_zero());
  EXPECT_THROW(multi_arith(s, parse_poly("x", r), ArithOp::add), ModulusMismatch);
}

TEST(MultiArith, RingAxioms) {
  std::mt19937_64 rng(99);
  auto r = poly_ring(3, {{"t", 0}, {"x", 1}, {"y", 1}, {"z", 1}});
  for (int it = 0; it < 60; ++it) {
    auto a = random_multi(rng, r, 6, 3), b = random_multi(rng, r, 6, 3), c = random_multi(rng, r, 6, 3);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
    if (!b.is_zero()) EXPECT_EQ(divide_exact(a * b, b), a);
  }
}

TEST(MultiPoly, PowMatchesRepeatedProduct) {
  auto r = poly_ring(5, {{"t", 0}, {"x", 1}, {"y", 1}});
  auto f = parse_poly("x + 2*t*y + 3", r);
  MultiPoly acc = MultiPoly::constant(r, 1);
  for (int k = 0; k <= 7; ++k) {
    EXPECT_EQ(f.pow(k), acc);
    acc = acc * f;
  }
}

TEST(Frobenius, Examples) {
  auto r = ring(2, {{"x", 1}, {"y", 1}});
  auto I = ideal(r, {"x", "y"});
  auto F = frobenius_generators(I, PrimePower::make(PrimeModulus(2), 2));
  ASSERT_EQ(F.generators().size(), 2u);
  EXPECT_TRUE(ideal_equal(F, ideal(r, {"x^4", "y^4"})));

  auto r5 = ring(3, {{"t", 0}, {"u", 1}, {"v", 1}, {"x", 1}, {"y", 1}});
  auto F5 = frobenius_generators(ideal(r5, {"u", "v", "x", "y"}), PrimePower::make(PrimeModulus(3), 1));
  EXPECT_TRUE(ideal_equal(F5, ideal(r5, {"u^3", "v^3", "x^3", "y^3"})));

  auto Fs = frobenius_generators(ideal(r, {"x+y"}), PrimePower::make(PrimeModulus(2), 1));
  EXPECT_EQ(Fs.generators()[0], poly(r, "x^2+y^2"));

  EXPECT_THROW(frobenius_generators(I, PrimePower::make(PrimeModulus(3), 1)), ModulusMismatch);
}

TEST(Frobenius, GeneratorsArePowersAndInsideOrdinaryPower) {
  std::mt19937_64 rng(5);
  for (std::uint64_t p : {2, 3}) {
    auto r = ring(p, {{"t", 0}, {"x", 1}, {"y", 1}}, {"x*y*(x-y)*(x-t*y)"});
    auto I = ideal(r, {"x + t*y", "y^2 + x*y", "x*y"});
    for (unsigned e = 1; e <= 2; ++e) {
      auto q = PrimePower::make(PrimeModulus(p), e);
      auto F = frobenius_generators(I, q);
      ASSERT_EQ(F.generators().size(), I.generators().size());
      for (std::size_t i = 0; i < I.generators().size(); ++i)
        EXPECT_EQ(F.generators()[i], I.generators()[i].pow(q.q));
      // I^q generated by all q-fold products of generators.
      std::vector<MultiPoly> prods;
      const auto& g = I.generators();
      for (std::uint64_t a = 0; a <= q.q; ++a)
        for (std::uint64_t b = 0; a + b <= q.q; ++b)
          prods.push_back(g[0].pow(a) * g[1].pow(b) * g[2].pow(q.q - a - b));
      Ideal Iq(r, prods);
      EXPECT_TRUE(contains(Iq, F));
    }
  }
}
