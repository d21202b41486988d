#include "frobgrow/cli/commands.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include "frobgrow/cli/ringfile.hpp"
#include "frobgrow/errors.hpp"
#include "frobgrow/groebner.hpp"
#include "frobgrow/parser.hpp"

namespace frobgrow::cli {
namespace {

using json = nlohmann::ordered_json;

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

PrimeModulus need_p(const RunConfig& c) {
  if (!c.p) throw InputError("--p is required");
  return PrimeModulus(*c.p);
}

FamilySpec resolve_family(const RunConfig& c) {
  if (c.ring_file) {
    FamilySpec fam = load_ring_file(*c.ring_file);
    if (c.p && *c.p != fam.ring->modulus().value())
      throw InputError("--p " + std::to_string(*c.p) + " does not match the ring file prime " +
                       std::to_string(fam.ring->modulus().value()));
    return fam;
  }
  if (!c.family) throw InputError("one of --family or --ring-file is required");
  auto kind = parse_family_name(*c.family);
  if (!kind) throw InputError("unknown family '" + *c.family + "'");
  if (*kind == FamilyKind::custom) throw InputError("family 'custom' needs --ring-file");
  const PrimeModulus p = need_p(c);
  std::optional<SequenceSpec> spec;
  if (c.r) {
    if (*kind != FamilyKind::ss5) throw InputError("--r only applies to the ss5 family");
    spec = parse_spec(*c.r, p);
  }
  return named_family(*kind, p, spec);
}

std::vector<PrimePower> resolve_qs(const RunConfig& c, PrimeModulus p) {
  if (c.q) {
    if (c.e_range) throw InputError("give either --q or --e, not both");
    return {PrimePower::from_value(p, *c.q)};
  }
  std::vector<PrimePower> out;
  for (unsigned e : parse_e_range(c.e_range.value_or("1"))) out.push_back(PrimePower::make(p, e));
  return out;
}

std::string factor_text(const UniPoly& f, std::uint64_t seed) {
  if (f.is_zero()) return "0";
  return uni_factor(f, seed).to_string();
}

json poly_list(const std::vector<UniPoly>& v) {
  json a = json::array();
  for (const auto& f : v) a.push_back(f.to_string());
  return a;
}

std::string csv_header_and_rows(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const std::string& s = cells[i];
      if (i) out << ',';
      if (s.find_first_of(",\"\n") != std::string::npos) {
        out << '"';
        for (char ch : s) out << (ch == '"' ? std::string("\"\"") : std::string(1, ch));
        out << '"';
      } else {
        out << s;
      }
    }
    out << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
  return out.str();
}

// Cumulative distinct irreducibles across census rows.
struct Accumulator {
  std::vector<UniPoly> seen;

  std::vector<UniPoly> add(const FactorList& f) {
    std::vector<UniPoly> fresh;
    for (const auto& [g, m] : f.factors) {
      bool known = false;
      for (const auto& s : seen) known = known || s == g;
      if (!known) {
        seen.push_back(g);
        fresh.push_back(g);
      }
    }
    return fresh;
  }
  std::vector<UniPoly> sorted() const {
    auto v = seen;
    std::sort(v.begin(), v.end(), canonical_less);
    return v;
  }
};

std::string first_failure(const DecompositionReport& r) {
  if (!r.intersection_verified) return "intersection check failed: " + r.intersection_witness;
  for (std::size_t i = 0; i < r.sanity.size(); ++i)
    if (!r.sanity[i].pass) return "component " + std::to_string(i) + " failed primary sanity: " + r.sanity[i].witness;
  for (const auto& c : r.embedded)
    if (c.measured_exponent && *c.measured_exponent > r.growth_bound(c))
      return "growth exponent " + std::to_string(*c.measured_exponent) + " exceeds n*q+s = " +
             std::to_string(r.growth_bound(c)) + " for tau = " + c.tau->first.to_string();
  return "";
}

}  // namespace

std::string CommandResult::render(OutputFormat f) const {
  switch (f) {
    case OutputFormat::json: return json.dump(2) + "\n";
    case OutputFormat::csv: return csv;
    case OutputFormat::text: return text;
  }
  return "";
}

std::vector<unsigned> parse_e_range(const std::string& s) {
  auto number = [&](const std::string& part) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
      throw InputError("bad exponent range '" + s + "'");
    unsigned long v = std::stoul(part);
    if (v < 1 || v > 64) throw InputError("exponent out of range in '" + s + "'");
    return static_cast<unsigned>(v);
  };
  auto dots = s.find("..");
  unsigned lo, hi;
  if (dots == std::string::npos) {
    lo = hi = number(s);
  } else {
    lo = number(s.substr(0, dots));
    hi = number(s.substr(dots + 2));
  }
  if (lo > hi) throw InputError("empty exponent range '" + s + "'");
  std::vector<unsigned> out;
  for (unsigned e = lo; e <= hi; ++e) out.push_back(e);
  return out;
}

SequenceSpec parse_spec(const std::string& r, PrimeModulus p) {
  std::vector<std::string> parts;
  std::stringstream ss(r);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  if (parts.size() != 3) throw InputError("--r needs three comma-separated polynomials in t, got '" + r + "'");
  return SequenceSpec(parse_uni(parts[0], p), parse_uni(parts[1], p), parse_uni(parts[2], p));
}

void validate(const RunConfig& c) {
  if (c.panel > 10000) throw InputError("--panel is too large");
  const Budget& b = c.budget;
  if (!b.gb_pairs || !b.gb_basis || !b.oracle_dim || !b.minor_subsets || !b.saturation_steps ||
      !b.containment_products || !(b.wall_seconds > 0))
    throw InputError("budgets must be positive");
  if (c.e_range) parse_e_range(*c.e_range);
  if (c.family && c.p && *c.family == "brenner_monsky" && *c.p != 2)
    throw InputError("brenner_monsky requires p = 2 (got " + std::to_string(*c.p) + ")");
  if (c.p) PrimeModulus check(*c.p);
}

CommandResult cmd_pseq(const RunConfig& c) {
  const PrimeModulus p = need_p(c);
  if (!c.r) throw InputError("--r r0,r1,r2 is required");
  const SequenceSpec spec = parse_spec(*c.r, p);
  const unsigned n = c.n.value_or(6);
  if (n > 4096) throw InputError("--n is too large");
  auto table = p_seq_table(spec, n);

  CommandResult res;
  res.json["command"] = "pseq";
  res.json["p"] = p.value();
  res.json["spec"] = spec.to_string();
  res.json["degree_condition"] = spec.degree_condition();
  json rows = json::array();
  std::vector<std::vector<std::string>> csv;
  std::ostringstream text;
  text << "P_n for " << spec.to_string() << " over F_" << p.value() << "\n";
  for (unsigned i = 0; i <= n; ++i) {
    const UniPoly& P = table[i];
    const std::string f = factor_text(P, c.seed);
    rows.push_back({{"n", i},
                    {"P", P.to_string()},
                    {"degree", P.is_zero() ? json(nullptr) : json(P.degree())},
                    {"factors", f}});
    csv.push_back({std::to_string(i), P.to_string(), P.is_zero() ? "" : std::to_string(P.degree()), f});
    text << "P_" << i << ": " << P.to_string() << " = " << f << "\n";
  }
  res.json["rows"] = rows;
  res.csv = csv_header_and_rows({"n", "P", "degree", "factors"}, csv);
  res.text = text.str();
  return res;
}

CommandResult cmd_census(const RunConfig& c) {
  CommandResult res;
  std::vector<std::vector<std::string>> csv;
  std::ostringstream text;
  json rows = json::array();
  Accumulator acc;

  auto add_row = [&](const PrimePower& q, const std::string& label, const UniPoly& poly, double secs,
                     const json& extra) {
    FactorList f = poly.is_zero() ? FactorList{} : uni_factor(poly, c.seed);
    auto fresh = acc.add(f);
    json row{{"e", q.e}, {"q", q.q}, {"label", label}, {"poly", poly.to_string()},
             {"factors", poly.is_zero() ? "0" : f.to_string()}, {"new_irreducibles", poly_list(fresh)},
             {"cumulative_distinct", acc.seen.size()}};
    for (auto it = extra.begin(); it != extra.end(); ++it) row[it.key()] = it.value();
    if (c.timings) row["seconds"] = secs;
    rows.push_back(row);
    csv.push_back({std::to_string(q.e), std::to_string(q.q), label, poly.to_string(), row["factors"].get<std::string>(),
                   std::to_string(acc.seen.size())});
    text << "q = " << q.q << "  " << label << " = " << row["factors"].get<std::string>()
         << "  cumulative distinct: " << acc.seen.size() << "\n";
  };

  if (c.r && !c.family && !c.ring_file) {
    const PrimeModulus p = need_p(c);
    const SequenceSpec spec = parse_spec(*c.r, p);
    res.json["command"] = "census";
    res.json["source"] = "sequence";
    res.json["p"] = p.value();
    res.json["spec"] = spec.to_string();
    for (const auto& q : resolve_qs(c, p)) {
      Stopwatch sw;
      const unsigned n = static_cast<unsigned>(q.q - 2);
      add_row(q, "P_" + std::to_string(n), p_seq(spec, n), sw.seconds(), json::object());
    }
  } else {
    FamilySpec fam = resolve_family(c);
    const PrimeModulus p = fam.ring->modulus();
    res.json["command"] = "census";
    res.json["family"] = fam.name();
    res.json["p"] = p.value();
    const bool witness = fam.kind == FamilyKind::ss5 || fam.kind == FamilyKind::ss7;
    res.json["source"] = witness ? "witness_colon" : "h_q";
    for (const auto& q : resolve_qs(c, p)) {
      Stopwatch sw;
      if (witness) {
        if (q.q < 2) throw InputError("witness colon needs q >= 2");
        add_row(q, "witness", witness_colon(fam, q), sw.seconds(), json::object());
      } else {
        auto cert = h_q(*fam.ring, q, c.budget, c.seed);
        add_row(q, "h_q", cert.h, sw.seconds(), json{{"status", cert.budget_exhausted ? "PARTIAL" : "COMPLETE"}});
        if (cert.budget_exhausted) res.exit_code = kBudgetExhausted;
      }
    }
  }
  res.json["rows"] = rows;
  res.json["distinct_irreducibles"] = poly_list(acc.sorted());
  res.csv = csv_header_and_rows({"e", "q", "label", "poly", "factors", "cumulative_distinct"}, csv);
  res.text = text.str();
  if (res.exit_code == kBudgetExhausted) res.message = "h_q certificate is PARTIAL (minor budget exhausted)";
  return res;
}

CommandResult cmd_hq(const RunConfig& c) {
  FamilySpec fam = resolve_family(c);
  CommandResult res;
  res.json["command"] = "hq";
  res.json["family"] = fam.name();
  json certs = json::array();
  std::vector<std::vector<std::string>> csv;
  std::ostringstream text;
  for (const auto& q : resolve_qs(c, fam.ring->modulus())) {
    Stopwatch sw;
    auto cert = h_q(*fam.ring, q, c.budget, c.seed);
    json j = cert.to_json();
    if (c.timings) j["seconds"] = sw.seconds();
    certs.push_back(j);
    const std::string status = cert.budget_exhausted ? "PARTIAL" : "COMPLETE";
    csv.push_back({std::to_string(q.q), cert.h.to_string(), cert.factorization.to_string(), std::to_string(cert.s_max),
                   std::to_string(cert.minors_examined), status});
    text << "q = " << q.q << "  h_q = " << cert.factorization.to_string() << "  s_max = " << cert.s_max << "  ["
         << status << "]\n";
    if (cert.budget_exhausted) {
      res.exit_code = kBudgetExhausted;
      res.message = "h_q certificate is PARTIAL (minor budget exhausted)";
    }
  }
  res.json["certificates"] = certs;
  res.csv = csv_header_and_rows({"q", "h", "factors", "s_max", "minors_examined", "status"}, csv);
  res.text = text.str();
  return res;
}

CommandResult cmd_decompose(const RunConfig& c) {
  FamilySpec fam = resolve_family(c);
  const PrimeModulus p = fam.ring->modulus();
  CommandResult res;
  res.json["command"] = "decompose";
  json reports = json::array();
  std::ostringstream text;
  bool first = true;
  DecompositionOptions opts;
  opts.sanity_panel = c.panel;
  opts.seed = c.seed;
  for (const auto& q : resolve_qs(c, p)) {
    std::optional<HqCertificate> cert;
    UniPoly h(p);
    std::string source;
    if (c.h_source == "minors") {
      cert = h_q(*fam.ring, q, c.budget, c.seed);
      h = cert->h;
      source = "minors";
    } else if (c.h_source == "closed-form") {
      if (!fam.sequence || fam.kind != FamilyKind::ss5) throw InputError("--h closed-form needs the ss5 family");
      h = ss_hq_closed_form(*fam.sequence, q);
      source = "closed-form";
    } else {
      h = parse_uni(c.h_source, p);
      source = "explicit";
    }
    if (h.is_zero()) throw InputError("h must be nonzero");
    auto rep = stable_decomposition(fam, q, h, opts);
    rep.h_source = source;
    rep.certificate = cert;
    reports.push_back(rep.to_json(c.timings));
    res.csv += rep.to_csv(first);
    first = false;

    text << fam.name() << " q = " << q.q << "  h (" << source << ") = " << rep.h_factors.to_string() << "\n";
    text << "  isolated: " << rep.isolated.ideal.to_string() << "  k = "
         << (rep.isolated.measured_exponent ? std::to_string(*rep.isolated.measured_exponent) : "-") << "\n";
    for (const auto& comp : rep.embedded)
      text << "  embedded tau = " << comp.tau->first.to_string() << " s = " << comp.tau->second << "  k = "
           << (comp.measured_exponent ? std::to_string(*comp.measured_exponent) : "-") << " <= "
           << rep.growth_bound(comp) << "\n";
    text << "  verified: " << (rep.verified() ? "yes" : "no") << "\n";
    if (!rep.verified() && res.exit_code == kSuccess) {
      res.exit_code = kVerificationFailed;
      res.message = "q = " + std::to_string(q.q) + ": " + first_failure(rep);
    }
  }
  res.json["reports"] = reports;
  res.text = text.str();
  return res;
}

CommandResult cmd_verify_lemmas(const RunConfig& c) {
  const PrimeModulus p = need_p(c);
  const SequenceSpec spec = parse_spec(c.r.value_or("1,t,1"), p);
  const unsigned n = c.n.value_or(2);
  if (n > 16) throw InputError("--n is too large for the membership suite");
  Stopwatch sw;
  auto suite = lemma_membership_suite(spec, n, c.seed, c.panel);
  CommandResult res;
  res.json["command"] = "verify-lemmas";
  json j = suite.to_json();
  for (auto it = j.begin(); it != j.end(); ++it) res.json[it.key()] = it.value();
  if (c.timings) res.json["seconds"] = sw.seconds();
  std::vector<std::vector<std::string>> csv;
  std::ostringstream text;
  for (const auto& it : suite.items) {
    csv.push_back({it.part, it.instance, it.pass ? "pass" : "fail", it.witness});
    text << (it.pass ? "PASS " : "FAIL ") << it.part << " " << it.instance
         << (it.witness.empty() ? "" : "  witness: " + it.witness) << "\n";
  }
  res.csv = csv_header_and_rows({"part", "instance", "result", "witness"}, csv);
  res.text = text.str();
  if (!suite.all_pass()) {
    res.exit_code = kVerificationFailed;
    for (const auto& it : suite.items)
      if (!it.pass) {
        res.message = it.part + " " + it.instance + ": " + it.witness;
        break;
      }
  }
  return res;
}

CommandResult cmd_saturate(const RunConfig& c) {
  FamilySpec fam = resolve_family(c);
  if (!c.z) throw InputError("--z is required");
  MultiPoly z = parse_poly(*c.z, *fam.ring);
  if (!fam.minimal_prime.empty() && contains(Ideal(make_ring_spec(fam.ring->ring()), fam.minimal_prime), z))
    throw InputError("z lies in the minimal prime of I");
  Stopwatch sw;
  auto qs = resolve_qs(c, fam.ring->modulus());
  auto g = saturation_growth(fam, z, qs);
  CommandResult res;
  res.json["command"] = "saturate";
  res.json["family"] = fam.name();
  res.json["z"] = z.to_string();
  json rows = json::array();
  std::vector<std::vector<std::string>> csv;
  std::ostringstream text;
  for (const auto& r : g.rows) {
    rows.push_back({{"e", r.q.e}, {"q", r.q.q}, {"N_q", r.exponent}});
    csv.push_back({std::to_string(r.q.e), std::to_string(r.q.q), std::to_string(r.exponent)});
    text << "q = " << r.q.q << "  N_q = " << r.exponent << "\n";
  }
  res.json["rows"] = rows;
  res.json["max_ratio"] = g.max_ratio;
  if (c.timings) res.json["seconds"] = sw.seconds();
  res.csv = csv_header_and_rows({"e", "q", "N_q"}, csv);
  text << "max N_q/q = " << g.max_ratio << "\n";
  res.text = text.str();
  return res;
}

CommandResult cmd_witness(const RunConfig& c) {
  FamilySpec fam = resolve_family(c);
  if (fam.kind != FamilyKind::ss5 && fam.kind != FamilyKind::ss7)
    throw InputError("witness is defined for the ss5 and ss7 families");
  if (!fam.sequence) throw InputError("witness needs the sequence data of a named family");
  CommandResult res;
  res.json["command"] = "witness";
  res.json["family"] = fam.name();
  json rows = json::array();
  std::vector<std::vector<std::string>> csv;
  std::ostringstream text;
  for (const auto& q : resolve_qs(c, fam.ring->modulus())) {
    Stopwatch sw;
    UniPoly w = witness_colon(fam, q);
    UniPoly expected = p_seq(*fam.sequence, static_cast<unsigned>(q.q - 2)).monic();
    const bool match = w == expected;
    json row{{"e", q.e}, {"q", q.q}, {"witness_element", witness_element(fam, q).to_string()},
             {"contraction", w.to_string()}, {"expected", expected.to_string()}, {"match", match}};
    if (c.timings) row["seconds"] = sw.seconds();
    rows.push_back(row);
    csv.push_back({std::to_string(q.e), std::to_string(q.q), w.to_string(), expected.to_string(), match ? "true" : "false"});
    text << "q = " << q.q << "  (I^[q] : w) ∩ k[t] = (" << w.to_string() << ")  P_{q-2} = " << expected.to_string()
         << (match ? "  ok" : "  MISMATCH") << "\n";
    if (!match && res.exit_code == kSuccess) {
      res.exit_code = kVerificationFailed;
      res.message = "q = " + std::to_string(q.q) + ": contraction " + w.to_string() + " differs from " + expected.to_string();
    }
  }
  res.json["rows"] = rows;
  res.csv = csv_header_and_rows({"e", "q", "contraction", "expected", "match"}, csv);
  res.text = text.str();
  return res;
}

}  // namespace frobgrow::cli
