#include "frobgrow/decomposer.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "frobgrow/errors.hpp"
#include "frobgrow/frobenius.hpp"
#include "frobgrow/groebner.hpp"
#include "frobgrow/parser.hpp"

namespace frobgrow {
namespace {

MultiPoly tpoly(const UniPoly& u, const RingSpecPtr& ring) {
  return from_uni(u, ring->ring(), ring->coefficient_var());
}

std::vector<MultiPoly> graded_variables(const RingSpecPtr& ring) {
  std::vector<MultiPoly> out;
  for (auto v : ring->ring()->graded_vars()) out.push_back(MultiPoly::variable(ring->ring(), v));
  return out;
}

UniPoly random_nonzero(std::mt19937_64& rng, PrimeModulus p, int min_degree, int max_degree) {
  for (;;) {
    const int d = min_degree + static_cast<int>(rng() % static_cast<std::uint64_t>(max_degree - min_degree + 1));
    std::vector<std::uint32_t> c(d + 1);
    for (auto& x : c) x = static_cast<std::uint32_t>(rng() % p.value());
    UniPoly g(p, c);
    if (g.degree() >= min_degree) return g;
  }
}

PolyRingPtr make_ring(PrimeModulus p, const std::vector<std::string>& graded) {
  std::vector<Variable> vars{{"t", 0}};
  for (const auto& g : graded) vars.push_back({g, 1});
  return PolyRing::make(p, vars);
}

FamilySpec build_family(FamilyKind kind, PrimeModulus p, const std::vector<std::string>& graded,
                        const std::string& relation_source, std::optional<SequenceSpec> spec = std::nullopt,
                        std::optional<MultiPoly> relation = std::nullopt) {
  auto ring = make_ring(p, graded);
  MultiPoly f = relation ? *relation : parse_poly(relation_source, ring);
  auto rs = make_ring_spec(ring, {f});
  Ideal I = make_ideal(rs, graded);
  std::vector<MultiPoly> prime;
  for (const auto& g : graded) prime.push_back(parse_poly(g, ring));
  return FamilySpec{kind, rs, I, std::move(spec), std::move(prime), relation_source};
}

std::vector<std::string> texts(const std::vector<MultiPoly>& v) {
  std::vector<std::string> out;
  for (const auto& f : v) out.push_back(f.to_string());
  return out;
}

}  // namespace

std::string family_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::katzman: return "katzman";
    case FamilyKind::ss5: return "ss5";
    case FamilyKind::ss7: return "ss7";
    case FamilyKind::brenner_monsky: return "brenner_monsky";
    case FamilyKind::custom: return "custom";
  }
  return "custom";
}

std::optional<FamilyKind> parse_family_name(std::string_view name) {
  for (auto k : {FamilyKind::katzman, FamilyKind::ss5, FamilyKind::ss7, FamilyKind::brenner_monsky, FamilyKind::custom})
    if (family_name(k) == name) return k;
  return std::nullopt;
}

FamilySpec katzman_family(PrimeModulus p) {
  return build_family(FamilyKind::katzman, p, {"x", "y"}, "x*y*(x-y)*(x-t*y)");
}

FamilySpec ss5_family(const SequenceSpec& spec) {
  const PrimeModulus p = spec.modulus();
  auto ring = make_ring(p, {"u", "v", "x", "y"});
  const std::string source = "(" + spec.r0().to_string() + ")*(u*x)^2+(" + spec.r1().to_string() + ")*(u*x)*(v*y)+(" +
                             spec.r2().to_string() + ")*(v*y)^2";
  auto T = [&](const UniPoly& u) { return from_uni(u, ring, 0); };
  MultiPoly ux = parse_poly("u*x", ring), vy = parse_poly("v*y", ring);
  MultiPoly f = T(spec.r0()) * ux * ux + T(spec.r1()) * ux * vy + T(spec.r2()) * vy * vy;
  return build_family(FamilyKind::ss5, p, {"u", "v", "x", "y"}, source, spec, f);
}

FamilySpec ss5_family(PrimeModulus p) {
  return ss5_family(SequenceSpec(UniPoly::constant(p, 1), UniPoly::var(p), UniPoly::constant(p, 1)));
}

FamilySpec ss7_family(PrimeModulus p) {
  return build_family(FamilyKind::ss7, p, {"u", "v", "w", "x", "y", "z"},
                      "(u*x)^2+(v*y)^2+t*(u*x)*(v*y)+t*(w*z)^2",
                      SequenceSpec(UniPoly::constant(p, 1), UniPoly::var(p), UniPoly::constant(p, 1)));
}

FamilySpec brenner_monsky_family(PrimeModulus p) {
  if (p.value() != 2) throw InputError("brenner_monsky requires p = 2 (got " + std::to_string(p.value()) + ")");
  return build_family(FamilyKind::brenner_monsky, p, {"x", "y", "z"}, "z^4+z^2*x*y+z*x^3+z*y^3+t*x^2*y^2");
}

FamilySpec named_family(FamilyKind kind, PrimeModulus p, const std::optional<SequenceSpec>& spec) {
  switch (kind) {
    case FamilyKind::katzman: return katzman_family(p);
    case FamilyKind::ss5:
      if (spec) {
        require_same_modulus(p, spec->modulus());
        return ss5_family(*spec);
      }
      return ss5_family(p);
    case FamilyKind::ss7: return ss7_family(p);
    case FamilyKind::brenner_monsky: return brenner_monsky_family(p);
    case FamilyKind::custom: break;
  }
  throw InputError("custom families come from ring files");
}

bool DecompositionReport::sanity_passed() const {
  for (const auto& s : sanity)
    if (!s.pass) return false;
  return true;
}

std::uint64_t DecompositionReport::growth_bound(const PrimaryComponent& c) const {
  return static_cast<std::uint64_t>(graded_vars) * q.q + (c.tau ? c.tau->second : 0);
}

nlohmann::ordered_json DecompositionReport::to_json(bool timings) const {
  nlohmann::ordered_json j;
  j["family"] = family;
  j["p"] = q.p.value();
  j["e"] = q.e;
  j["q"] = q.q;
  j["graded_vars"] = graded_vars;
  j["h_source"] = h_source;
  j["h"] = h.to_string();
  j["h_factors"] = h_factors.to_string();
  j["certificate"] = certificate ? certificate->to_json() : nlohmann::ordered_json(nullptr);
  auto comps = nlohmann::ordered_json::array();
  auto emit = [&](const PrimaryComponent& c, const char* role, const SanityVerdict* s) {
    nlohmann::ordered_json cj;
    cj["role"] = role;
    cj["tau"] = c.tau ? nlohmann::ordered_json(c.tau->first.to_string()) : nlohmann::ordered_json(nullptr);
    cj["multiplicity"] = c.tau ? nlohmann::ordered_json(c.tau->second) : nlohmann::ordered_json(nullptr);
    cj["generators"] = texts(c.ideal.basis());
    cj["radical_generators"] = texts(c.radical_generators);
    cj["measured_exponent"] =
        c.measured_exponent ? nlohmann::ordered_json(*c.measured_exponent) : nlohmann::ordered_json(nullptr);
    cj["growth_bound"] = c.tau ? nlohmann::ordered_json(growth_bound(c)) : nlohmann::ordered_json(nullptr);
    if (s) cj["sanity"] = {{"pass", s->pass}, {"witness", s->witness}};
    comps.push_back(cj);
  };
  emit(isolated, "isolated", sanity.empty() ? nullptr : &sanity[0]);
  for (std::size_t i = 0; i < embedded.size(); ++i)
    emit(embedded[i], "embedded", sanity.size() > i + 1 ? &sanity[i + 1] : nullptr);
  j["components"] = comps;
  auto dropped = nlohmann::ordered_json::array();
  for (const auto& d : dropped_factors) dropped.push_back(d.to_string());
  j["dropped_factors"] = dropped;
  j["intersection_verified"] = intersection_verified;
  j["intersection_witness"] = intersection_witness;
  j["growth_bound_checked"] = growth_bound_checked;
  j["verified"] = verified();
  j["primaryness_check"] = "necessary-condition panel (powers of radical generators, colon stability)";
  if (timings) j["seconds"] = seconds;
  return j;
}

std::string DecompositionReport::to_csv(bool header) const {
  std::ostringstream out;
  if (header)
    out << "family,p,q,h_source,role,tau,multiplicity,measured_exponent,growth_bound,sanity,intersection_verified,"
           "verified\n";
  auto row = [&](const PrimaryComponent& c, const char* role, std::size_t idx) {
    out << family << ',' << q.p.value() << ',' << q.q << ',' << h_source << ',' << role << ','
        << (c.tau ? c.tau->first.to_string() : "") << ',' << (c.tau ? std::to_string(c.tau->second) : "") << ','
        << (c.measured_exponent ? std::to_string(*c.measured_exponent) : "") << ','
        << (c.tau ? std::to_string(growth_bound(c)) : "") << ','
        << (idx < sanity.size() ? (sanity[idx].pass ? "pass" : "fail") : "") << ','
        << (intersection_verified ? "true" : "false") << ',' << (verified() ? "true" : "false") << '\n';
  };
  row(isolated, "isolated", 0);
  for (std::size_t i = 0; i < embedded.size(); ++i) row(embedded[i], "embedded", i + 1);
  return out.str();
}

DecompositionReport stable_decomposition(const FamilySpec& fam, const PrimePower& q, const UniPoly& h,
                                         const DecompositionOptions& opts) {
  if (h.is_zero()) throw InputError("h must be nonzero");
  require_same_modulus(q.p, fam.ring->modulus());
  require_same_modulus(h.modulus(), fam.ring->modulus());
  const auto start = std::chrono::steady_clock::now();
  const RingSpecPtr& R = fam.ring;

  Ideal F = frobenius_generators(fam.ideal, q);
  FactorList factors = uni_factor(h, opts.seed);
  Ideal Q = colon(F, tpoly(h, R));
  const auto xs = graded_variables(R);

  DecompositionReport rep{fam.name(), q, fam.graded_vars(), "", h.monic(), factors, std::nullopt,
                          PrimaryComponent{Q, xs, std::nullopt, std::nullopt}, {}, {}, false, "", false, {}, 0.0};
  for (const auto& [tau, s] : factors.factors) {
    Ideal Qi = sum(F, std::vector<MultiPoly>{tpoly(tau.pow(s), R)});
    if (Qi.is_unit()) {
      rep.dropped_factors.push_back(tau);
      continue;
    }
    auto rad = xs;
    rad.push_back(tpoly(tau, R));
    rep.embedded.push_back(PrimaryComponent{Qi, rad, std::make_pair(tau, s), std::nullopt});
  }

  Ideal K = Q;
  for (const auto& c : rep.embedded) K = intersect(K, c.ideal);
  rep.intersection_verified = ideal_equal(K, F);
  if (!rep.intersection_verified) {
    for (const auto& g : F.generators())
      if (!contains(K, g)) {
        rep.intersection_witness = "I^[q] generator not in the intersection: " + g.to_string();
        break;
      }
    if (rep.intersection_witness.empty())
      for (const auto& g : K.basis())
        if (!contains(F, g)) {
          rep.intersection_witness = "intersection element not in I^[q]: " + g.to_string();
          break;
        }
  }

  if (opts.measure_exponents) {
    rep.isolated.measured_exponent = growth_exponent(rep.isolated);
    rep.growth_bound_checked = true;
    for (auto& c : rep.embedded) {
      c.measured_exponent = growth_exponent(c);
      if (*c.measured_exponent > rep.growth_bound(c)) rep.growth_bound_checked = false;
    }
  }
  {
    rep.sanity.push_back(primary_sanity(rep.isolated, opts.sanity_panel, opts.seed));
    for (std::size_t i = 0; i < rep.embedded.size(); ++i)
      rep.sanity.push_back(primary_sanity(rep.embedded[i], opts.sanity_panel, opts.seed + i + 1));
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

unsigned growth_exponent(const PrimaryComponent& c) {
  if (c.radical_generators.empty()) throw InputError("growth_exponent: empty radical");
  if (c.ideal.is_unit()) return 0;
  Ideal P(c.ideal.ring_spec(), c.radical_generators);
  auto holds = [&](unsigned k) { return power_containment(P, k, c.ideal); };
  unsigned hi = 1;
  while (!holds(hi)) {
    if (hi >= (1u << 15)) throw BudgetExceeded("growth_exponent: no containment up to exponent 32768");
    hi *= 2;
  }
  unsigned lo = hi / 2;  // fails (or is 0)
  while (hi - lo > 1) {
    unsigned mid = lo + (hi - lo) / 2;
    if (holds(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

SanityVerdict primary_sanity(const PrimaryComponent& c, unsigned panel, std::uint64_t seed) {
  constexpr unsigned kPowerCap = 1024;
  for (const auto& g : c.radical_generators) {
    bool found = false;
    MultiPoly pw = g;
    for (unsigned j = 1; j <= kPowerCap; j *= 2) {
      if (contains(c.ideal, pw)) {
        found = true;
        break;
      }
      if (j < kPowerCap) pw = pw * pw;
    }
    if (!found)
      return {false, g.to_string() + ": no power up to exponent " + std::to_string(kPowerCap) + " lies in the ideal"};
  }
  const RingSpecPtr& R = c.ideal.ring_spec();
  if (R->ring()->coefficient_vars().size() != 1) return {true, ""};
  const PrimeModulus p = R->modulus();
  std::mt19937_64 rng(seed);
  for (unsigned i = 0; i < panel; ++i) {
    UniPoly g = random_nonzero(rng, p, 1, 3);
    if (c.tau && !uni_gcd(g, c.tau->first).is_one()) {
      --i;
      continue;
    }
    if (!ideal_equal(colon(c.ideal, tpoly(g, R)), c.ideal))
      return {false, "colon by g(t) = " + g.to_string() + " changes the ideal"};
  }
  return {true, ""};
}

SaturationGrowth saturation_growth(const FamilySpec& fam, const MultiPoly& z, const std::vector<PrimePower>& qs) {
  require_same_ring(*z.ring(), *fam.ring->ring());
  if (z.is_zero()) throw InputError("saturation element must be nonzero");
  SaturationGrowth out;
  for (const auto& q : qs) {
    Ideal F = frobenius_generators(fam.ideal, q);
    auto s = saturate(F, z);
    out.rows.push_back({q, s.stabilization_exponent});
    out.max_ratio = std::max(out.max_ratio, static_cast<double>(s.stabilization_exponent) / static_cast<double>(q.q));
  }
  return out;
}

UniPoly ss_hq_closed_form(const SequenceSpec& spec, const PrimePower& q) {
  require_same_modulus(spec.modulus(), q.p);
  if (spec.r0().is_zero() || spec.r2().is_zero()) throw InputError("closed form needs r0*r2 != 0");
  if (!spec.degree_condition()) throw InputError("closed form needs 2 deg r1 > deg r0 + deg r2");
  if (q.q < 1) throw InputError("closed form needs q >= 1");
  return (spec.r0().pow(3 * q.q) * spec.r2().pow(3 * q.q) * big_L(spec, static_cast<unsigned>(q.q))).monic();
}

MultiPoly witness_element(const FamilySpec& fam, const PrimePower& q) {
  if (q.q < 2) throw InputError("witness colon needs q >= 2");
  const auto& ring = fam.ring->ring();
  auto var = [&](const char* n) { return MultiPoly::variable(ring, *ring->index_of(n)); };
  switch (fam.kind) {
    case FamilyKind::ss5:
      return var("u") * var("x") * (var("v") * var("y")).pow(q.q - 2) * var("u") * var("v");
    case FamilyKind::ss7:
      return var("u") * var("x") * (var("v") * var("y")).pow(q.q - 2) * var("u") * var("v") * var("w").pow(q.q - 1);
    default: throw InputError("witness colon is defined for ss5 and ss7 only");
  }
}

UniPoly witness_colon(const FamilySpec& fam, const PrimePower& q) {
  MultiPoly w = witness_element(fam, q);
  Ideal F = frobenius_generators(fam.ideal, q);
  Ideal J = colon(F, w);
  Ideal E = eliminate(J, fam.ring->ring()->graded_vars());
  const std::size_t t = fam.ring->coefficient_var();
  UniPoly g(fam.ring->modulus());
  for (const auto& e : E.generators()) g = uni_gcd(g, to_uni(e, t));
  return g;
}

bool SuiteReport::all_pass() const {
  for (const auto& i : items)
    if (!i.pass) return false;
  return true;
}

nlohmann::ordered_json SuiteReport::to_json() const {
  nlohmann::ordered_json j;
  j["p"] = spec.modulus().value();
  j["r0"] = spec.r0().to_string();
  j["r1"] = spec.r1().to_string();
  j["r2"] = spec.r2().to_string();
  j["n"] = n;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& i : items)
    arr.push_back({{"part", i.part}, {"instance", i.instance}, {"pass", i.pass}, {"witness", i.witness}});
  j["items"] = arr;
  j["all_pass"] = all_pass();
  return j;
}

SuiteReport lemma_membership_suite(const SequenceSpec& spec, unsigned n, std::uint64_t seed, unsigned panel) {
  if (n < 1) throw InputError("membership suite needs n >= 1");
  if (!spec.degree_condition()) throw InputError("membership suite needs 2 deg r1 > deg r0 + deg r2");
  const PrimeModulus p = spec.modulus();
  SuiteReport rep{spec, n, {}};
  const std::string N = std::to_string(n);

  auto ring5 = make_ring_spec(make_ring(p, {"u", "v", "x", "y"}));
  const auto& S = ring5->ring();
  auto T = [&](const UniPoly& u) { return tpoly(u, ring5); };
  auto V = [&](const char* name) { return MultiPoly::variable(S, *S->index_of(name)); };
  const MultiPoly u = V("u"), v = V("v"), x = V("x"), y = V("y");
  const MultiPoly ux = u * x, vy = v * y;
  const MultiPoly rel = T(spec.r0()) * ux * ux + T(spec.r1()) * ux * vy + T(spec.r2()) * vy * vy;
  Ideal In(ring5, {u.pow(n), v.pow(n), x.pow(n), y.pow(n), rel});
  const UniPoly L = big_L(spec, n);
  const UniPoly r02 = spec.r0() * spec.r2();

  for (unsigned a = 0; 2 * a <= 2 * n; ++a)
    for (unsigned b = 0; 2 * a + 2 * b <= 2 * n; ++b)
      for (unsigned c = 0; 2 * a + 2 * b + c <= 2 * n; ++c) {
        const unsigned d = 2 * n - 2 * a - 2 * b - c;
        MultiPoly e = T(r02.pow(a + b) * L) * ux.pow(a) * vy.pow(b) * x.pow(c) * y.pow(d);
        bool ok = contains(In, e);
        rep.items.push_back({"inclusion_b",
                             "(a,b,c,d)=(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) +
                                 "," + std::to_string(d) + ")",
                             ok, ok ? "" : e.to_string()});
      }

  const MultiPoly scale_c = T(spec.r0().pow(n) * spec.r2().pow(n) * L);
  std::vector<MultiPoly> top;
  for (unsigned a = 0; a <= 2 * n; ++a)
    for (unsigned b = 0; a + b <= 2 * n; ++b)
      for (unsigned c = 0; a + b + c <= 2 * n; ++c) {
        const unsigned d = 2 * n - a - b - c;
        MultiPoly m = u.pow(a) * v.pow(b) * x.pow(c) * y.pow(d);
        top.push_back(m);
        bool ok = contains(In, scale_c * m);
        rep.items.push_back({"inclusion_c", m.to_string(), ok, ok ? "" : (scale_c * m).to_string()});
      }

  Ideal Jn = sum(In, top);
  const UniPoly base_scale = spec.r0().pow(2 * n) * spec.r2().pow(2 * n);
  Ideal base = colon(Jn, T(base_scale));
  std::mt19937_64 rng(seed);
  for (unsigned i = 0; i < panel; ++i) {
    UniPoly g = random_nonzero(rng, p, 0, 3);
    bool ok = ideal_equal(colon(Jn, T(base_scale * g)), base);
    rep.items.push_back({"key_stability", "g=" + g.to_string(), ok, ok ? "" : "colon changes for g=" + g.to_string()});
  }

  {
    Ideal lhs = colon(In, T(spec.r0().pow(3 * n) * spec.r2().pow(3 * n) * L));
    bool ok = ideal_equal(lhs, base);
    rep.items.push_back({"primary_equality", "n=" + N, ok, ok ? "" : "I_n : r0^3n r2^3n L_n differs"});
  }

  {
    auto ring3 = make_ring_spec(make_ring(p, {"x", "y"}));
    const auto& S3 = ring3->ring();
    auto T3 = [&](const UniPoly& w) { return from_uni(w, S3, 0); };
    MultiPoly X = MultiPoly::variable(S3, 1), Y = MultiPoly::variable(S3, 2);
    Ideal K(ring3, {X.pow(n), Y.pow(n), T3(spec.r0()) * X * X + T3(spec.r1()) * X * Y + T3(spec.r2()) * Y * Y});
    MultiPoly e = X * Y.pow(n - 1) * T3(p_seq(spec, n - 1));
    bool ok = contains(K, e);
    rep.items.push_back({"colon", "n=" + N, ok, ok ? "" : e.to_string()});
  }
  return rep;
}

}  // namespace frobgrow
