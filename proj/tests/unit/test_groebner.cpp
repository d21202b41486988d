#include <gtest/gtest.h>

#include <random>

#include "frobgrow/buchberger.hpp"
#include "frobgrow/errors.hpp"
#include "frobgrow/groebner.hpp"
#include "helpers.hpp"

using namespace frobgrow;
using namespace frobgrow::testing;

namespace {

RingSpecPtr txy(std::uint64_t p) { return ring(p, {{"t", 0}, {"x", 1}, {"y", 1}}); }

std::vector<std::string> texts(const std::vector<MultiPoly>& v) {
  std::vector<std::string> out;
  for (const auto& f : v) out.push_back(f.to_string());
  return out;
}

bool same_ideal(const Ideal& a, const Ideal& b) { return ideal_equal(a, b); }

MultiPoly random_homogeneous(std::mt19937_64& rng, const RingSpecPtr& r, unsigned deg, unsigned tdeg, int terms) {
  const auto& ring = r->ring();
  MultiPoly f(ring);
  for (int i = 0; i < terms; ++i) {
    Monomial m(ring->nvars());
    unsigned left = deg;
    auto graded = ring->graded_vars();
    for (std::size_t k = 0; k + 1 < graded.size(); ++k) {
      unsigned e = static_cast<unsigned>(rng() % (left + 1));
      m.set(graded[k], e);
      left -= e;
    }
    if (!graded.empty()) m.set(graded.back(), left);
    for (auto v : ring->coefficient_vars()) m.set(v, static_cast<unsigned>(rng() % (tdeg + 1)));
    f += MultiPoly::term(ring, m, 1 + static_cast<std::uint32_t>(rng() % (ring->modulus().value() - 1)));
  }
  return f;
}

}  // namespace

TEST(Groebner, SmallBases) {
  auto r = txy(5);
  EXPECT_EQ(texts(groebner_basis(ideal(r, {"x"}))), std::vector<std::string>{"x"});
  EXPECT_EQ(texts(groebner_basis(ideal(r, {"x+y", "y"}))), (std::vector<std::string>{"y", "x"}));
  auto q = ideal(r, {"x^2", "y^2", "x^2+t*x*y+y^2"});
  auto basis = texts(groebner_basis(q));
  EXPECT_NE(std::find(basis.begin(), basis.end(), "t*x*y"), basis.end());
}

TEST(Groebner, ReducedAndDeterministic) {
  std::mt19937_64 rng(3);
  for (std::uint64_t p : {2, 3, 7}) {
    auto r = ring(p, {{"t", 0}, {"x", 1}, {"y", 1}, {"z", 1}});
    for (int it = 0; it < 20; ++it) {
      std::vector<MultiPoly> gens;
      for (int g = 0; g < 3; ++g) gens.push_back(random_homogeneous(rng, r, 2 + g % 2, 2, 3));
      Ideal I(r, gens), J(r, gens);
      const auto& a = groebner_basis(I);
      const auto& b = groebner_basis(J);
      ASSERT_EQ(a, b);
      for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].lead().c, 1u);
        for (std::size_t j = 0; j < a.size(); ++j) {
          if (i == j) continue;
          for (const auto& t : a[i].terms()) EXPECT_FALSE(a[j].lead().m.divides(t.m));
        }
      }
      for (const auto& g : gens) EXPECT_TRUE(contains(I, g));
    }
  }
}

TEST(Groebner, BudgetExceededIsAnError) {
  auto r = ring(7, {{"t", 0}, {"x", 1}, {"y", 1}, {"z", 1}});
  Budget tiny = current_budget();
  tiny.gb_pairs = 1;
  std::vector<MultiPoly> gens = {poly(r, "x^2+t*y*z"), poly(r, "y^2+x*z"), poly(r, "z^2+t*x*y")};
  EXPECT_THROW(reduced_groebner_basis(gens, r->ring(), r->ring()->default_order(), tiny), BudgetExceeded);
}

TEST(NormalForm, Examples) {
  auto r = txy(3);
  auto I = ideal(r, {"x^2", "y^2", "x^2+t*x*y+y^2"});
  EXPECT_TRUE(normal_form(poly(r, "t*x*y"), I).is_zero());
  EXPECT_EQ(normal_form(poly(r, "x"), ideal(r, {"x^2"})), poly(r, "x"));
  // n = 3, P_2 = t^2 - 1.
  auto I3 = ideal(r, {"x^3", "y^3", "x^2+t*x*y+y^2"});
  EXPECT_TRUE(normal_form(poly(r, "x*y^2*(t^2-1)"), I3).is_zero());
  EXPECT_FALSE(normal_form(poly(r, "x*y^2*t"), I3).is_zero());
}

TEST(IdealEqual, Examples) {
  auto r = txy(2);
  EXPECT_TRUE(ideal_equal(ideal(r, {"x", "y"}), ideal(r, {"x+y", "y"})));
  EXPECT_FALSE(ideal_equal(ideal(r, {"x"}), ideal(r, {"x^2"})));
  EXPECT_TRUE(ideal_equal(ideal(r, {"x^2", "y^2", "x*y*(x-y)*(x-t*y)"}), ideal(r, {"x^2", "y^2"})));
  EXPECT_THROW(ideal_equal(ideal(r, {"x"}), ideal(txy(3), {"x"})), ModulusMismatch);
}

TEST(Eliminate, Examples) {
  auto r = ring(2, {{"t", 0}, {"x", 1}});
  auto e1 = eliminate(ideal(r, {"x", "t^2+1"}), {1});
  EXPECT_EQ(texts(e1.generators()), std::vector<std::string>{"t^2+1"});
  auto e2 = eliminate(ideal(r, {"x^2", "t*x"}), {1});
  EXPECT_TRUE(e2.generators().empty());

  auto s5 = ring(3, {{"t", 0}, {"u", 1}, {"v", 1}, {"x", 1}, {"y", 1}}, {"u^2*x^2+t*u*x*v*y+v^2*y^2"});
  auto frob = ideal(s5, {"u^3", "v^3", "x^3", "y^3"});
  auto J3 = colon(frob, poly(s5, "u^2*v^2*x*y"));
  auto c = eliminate(J3, {1, 2, 3, 4});
  EXPECT_EQ(texts(c.generators()), std::vector<std::string>{"t"});
}

TEST(Eliminate, OutputIsContractionMember) {
  auto r = txy(5);
  auto I = ideal(r, {"x^2-t*y^2", "x*y-(t+1)*y^2", "y^3"});
  auto E = eliminate(I, {1});
  for (const auto& g : E.generators()) {
    EXPECT_FALSE(g.involves(1));
    EXPECT_TRUE(contains(I, g));
  }
}

TEST(Intersect, Examples) {
  auto r = txy(3);
  EXPECT_TRUE(same_ideal(intersect(ideal(r, {"x"}), ideal(r, {"y"})), ideal(r, {"x*y"})));
  auto I = ideal(r, {"x^2+t*y^2", "x*y"});
  EXPECT_TRUE(same_ideal(intersect(I, I), I));
  EXPECT_TRUE(same_ideal(intersect(ideal(r, {"x^2", "y"}), ideal(r, {"x"})), ideal(r, {"x^2", "x*y"})));
}

TEST(Intersect, Properties) {
  std::mt19937_64 rng(17);
  auto r = ring(3, {{"t", 0}, {"x", 1}, {"y", 1}, {"z", 1}});
  for (int it = 0; it < 15; ++it) {
    Ideal I(r, {random_homogeneous(rng, r, 2, 1, 2), random_homogeneous(rng, r, 1, 1, 2)});
    Ideal J(r, {random_homogeneous(rng, r, 1, 1, 3), random_homogeneous(rng, r, 2, 1, 2)});
    Ideal K = intersect(I, J);
    EXPECT_TRUE(contains(I, K));
    EXPECT_TRUE(contains(J, K));
    for (const auto& a : I.generators())
      for (const auto& b : J.generators()) EXPECT_TRUE(contains(K, a * b));
  }
}

TEST(Intersect, WithQuotientRelations) {
  auto r = ring(2, {{"t", 0}, {"x", 1}, {"y", 1}}, {"x^2+t*x*y+y^2"});
  auto I = ideal(r, {"x^2", "y^2"});
  auto K = intersect(ideal(r, {"x^2", "y^2", "x*y"}), ideal(r, {"x^2", "y^2", "t"}));
  EXPECT_TRUE(ideal_equal(K, I));
}

TEST(Colon, Examples) {
  auto r = txy(3);
  EXPECT_TRUE(same_ideal(colon(ideal(r, {"x*y"}), poly(r, "x")), ideal(r, {"y"})));
  auto I = ideal(r, {"x^2+t*y^2", "x*y^2"});
  EXPECT_TRUE(same_ideal(colon(I, poly(r, "1")), I));
  auto c = colon(ideal(r, {"x^2", "y^2", "x^2+t*x*y+y^2"}), poly(r, "x*y"));
  EXPECT_EQ(texts(eliminate(c, {1, 2}).generators()), std::vector<std::string>{"t"});
  EXPECT_THROW(colon(I, poly(r, "0")), InputError);
}

TEST(Colon, Properties) {
  std::mt19937_64 rng(23);
  auto r = ring(2, {{"t", 0}, {"x", 1}, {"y", 1}, {"z", 1}});
  for (int it = 0; it < 15; ++it) {
    Ideal I(r, {random_homogeneous(rng, r, 2, 1, 3), random_homogeneous(rng, r, 2, 1, 2),
                random_homogeneous(rng, r, 3, 0, 2)});
    MultiPoly f = random_homogeneous(rng, r, 1, 1, 2);
    if (f.is_zero()) continue;
    Ideal C = colon(I, f);
    EXPECT_TRUE(contains(C, I));
    for (const auto& g : C.generators()) EXPECT_TRUE(contains(I, f * g));
  }
}

TEST(ColonIdeal, Examples) {
  auto r = txy(5);
  EXPECT_TRUE(same_ideal(colon_ideal(ideal(r, {"x^2", "x*y"}), ideal(r, {"x"})), ideal(r, {"x", "y"})));
  auto I = ideal(r, {"x^3", "t*y"});
  EXPECT_TRUE(same_ideal(colon_ideal(I, ideal(r, {"1"})), I));
  EXPECT_TRUE(
      same_ideal(colon_ideal(ideal(r, {"x^2", "y^2"}), ideal(r, {"x", "y"})), ideal(r, {"x^2", "x*y", "y^2"})));
  EXPECT_THROW(colon_ideal(I, ideal(r, {})), InputError);
}

TEST(Saturate, Examples) {
  auto r = txy(3);
  auto s1 = saturate(ideal(r, {"x^2*y"}), poly(r, "y"));
  EXPECT_TRUE(same_ideal(s1.ideal, ideal(r, {"x^2"})));
  EXPECT_EQ(s1.stabilization_exponent, 1u);
  auto s2 = saturate(ideal(r, {"x^2"}), poly(r, "y"));
  EXPECT_TRUE(same_ideal(s2.ideal, ideal(r, {"x^2"})));
  EXPECT_EQ(s2.stabilization_exponent, 0u);
  auto s3 = saturate(ideal(r, {"x^2", "x*y"}), poly(r, "y"));
  EXPECT_TRUE(same_ideal(s3.ideal, ideal(r, {"x"})));
  EXPECT_EQ(s3.stabilization_exponent, 1u);
}

TEST(Saturate, FixedPointAndIterateCount) {
  auto r = txy(2);
  auto I = ideal(r, {"x^3*y^2", "x^5", "t*x*y^4"});
  auto f = poly(r, "y");
  auto s = saturate(I, f);
  Ideal it = I;
  for (unsigned k = 0; k < s.stabilization_exponent; ++k) it = colon(it, f);
  EXPECT_TRUE(ideal_equal(it, s.ideal));
  EXPECT_TRUE(ideal_equal(colon(s.ideal, f), s.ideal));
  EXPECT_EQ(s.stabilization_exponent, 4u);  // (x^3*y, x^5, t*x*y^3), (x^3, t*x*y^2), (x^3, t*x*y), (x^3, t*x)
}

TEST(PowerContainment, Examples) {
  auto r = txy(3);
  auto m = ideal(r, {"x", "y"});
  EXPECT_TRUE(power_containment(m, 2, ideal(r, {"x^2", "x*y", "y^2"})));
  EXPECT_FALSE(power_containment(m, 1, ideal(r, {"x^2", "y^2"})));
  EXPECT_TRUE(power_containment(m, 3, ideal(r, {"x^2", "y^2"})));
  EXPECT_FALSE(power_containment(m, 2, ideal(r, {"x^2", "y^2"})));
  EXPECT_FALSE(power_containment(m, 0, ideal(r, {"x^2", "y^2"})));
  EXPECT_TRUE(power_containment(ideal(r, {"x", "y", "t+1"}), 4, ideal(r, {"x^2", "y^2", "(t+1)^2"})));
  EXPECT_FALSE(power_containment(ideal(r, {"x", "y", "t+1"}), 3, ideal(r, {"x^2", "y^2", "(t+1)^2"})));
}

TEST(Oracle, Examples) {
  auto r = txy(5);
  auto I = ideal(r, {"x^2", "y^2", "x^2+t*x*y+y^2"});
  EXPECT_TRUE(member_bounded_oracle(poly(r, "t*x*y"), I, 1, 2));
  auto X = ideal(r, {"x^2"});
  for (unsigned b = 0; b < 5; ++b) EXPECT_FALSE(member_bounded_oracle(poly(r, "x"), X, b, b));
  auto I3 = ideal(r, {"x^3", "y^3", "x^2+t*x*y+y^2"});
  EXPECT_TRUE(member_bounded_oracle(poly(r, "x*y^2*(t^2-1)"), I3, 3, 3));
}

TEST(Oracle, BudgetIsAnError) {
  auto r = txy(5);
  Budget b = current_budget();
  Budget tiny = b;
  tiny.oracle_dim = 4;
  set_current_budget(tiny);
  EXPECT_THROW(member_bounded_oracle(poly(r, "x"), ideal(r, {"x^2", "y"}), 3, 3), BudgetExceeded);
  set_current_budget(b);
}

TEST(Oracle, MonotoneAndAgreesWithNormalForm) {
  std::mt19937_64 rng(41);
  for (int it = 0; it < 60; ++it) {
    std::uint64_t p = it % 2 ? 2 : 3;
    auto r = ring(p, {{"t", 0}, {"x", 1}, {"y", 1}});
    Ideal I(r, {random_homogeneous(rng, r, 2, 1, 2), random_homogeneous(rng, r, 2, 1, 3)});
    MultiPoly c0 = random_homogeneous(rng, r, 1, 1, 2), c1 = random_homogeneous(rng, r, 1, 1, 2);
    MultiPoly f = c0 * I.generators()[0] + (I.generators().size() > 1 ? c1 * I.generators()[1] : MultiPoly(r->ring()));
    if (it % 3 == 0) f += random_homogeneous(rng, r, 3, 1, 1);
    bool nf = contains(I, f);
    bool small = member_bounded_oracle(f, I, 1, 1);
    bool big = member_bounded_oracle(f, I, 2, 2);
    if (small) EXPECT_TRUE(big);
    if (big) EXPECT_TRUE(nf);
    if (it % 3 != 0) EXPECT_TRUE(small);
  }
}
