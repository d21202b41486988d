#include "frobgrow/cli/ringfile.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "frobgrow/errors.hpp"
#include "frobgrow/groebner.hpp"
#include "frobgrow/parser.hpp"

namespace frobgrow::cli {
namespace {

std::size_t line_of(const YAML::Node& n) { return static_cast<std::size_t>(n.Mark().line) + 1; }

[[noreturn]] void fail(const std::string& origin, const YAML::Node& n, const std::string& what) {
  throw InputError(origin + ": line " + std::to_string(line_of(n)) + ": " + what);
}

YAML::Node required(const std::string& origin, const YAML::Node& root, const char* key) {
  YAML::Node n = root[key];
  if (!n) fail(origin, root, "schema error: missing key '" + std::string(key) + "'");
  return n;
}

std::string scalar(const std::string& origin, const YAML::Node& n, const std::string& what) {
  if (!n.IsScalar()) fail(origin, n, "schema error: " + what + " must be a scalar");
  return n.Scalar();
}

MultiPoly parse_at(const std::string& origin, const YAML::Node& n, const PolyRingPtr& ring) {
  const std::string text = scalar(origin, n, "expression");
  try {
    return parse_poly(text, ring);
  } catch (const ParseError& e) {
    std::string msg = e.what();
    if (auto pos = msg.find(": "); pos != std::string::npos) msg = msg.substr(pos + 2);
    throw ParseError(origin + ": " + msg + " in '" + text + "'", e.column(), line_of(n));
  }
}

std::vector<MultiPoly> parse_list(const std::string& origin, const YAML::Node& n, const PolyRingPtr& ring,
                                  const char* key) {
  if (!n.IsSequence()) fail(origin, n, std::string("schema error: '") + key + "' must be a list");
  std::vector<MultiPoly> out;
  for (const auto& item : n) out.push_back(parse_at(origin, item, ring));
  return out;
}

FamilySpec build(const YAML::Node& root, const std::string& origin) {
  if (!root.IsMap()) throw InputError(origin + ": schema error: top level must be a mapping");
  static const std::set<std::string> known{"prime", "variables", "relations", "ideal", "minimal_prime", "family"};
  for (const auto& kv : root) {
    const std::string key = kv.first.as<std::string>();
    if (!known.count(key)) fail(origin, kv.first, "schema error: unknown key '" + key + "'");
  }

  YAML::Node pn = required(origin, root, "prime");
  std::uint64_t p = 0;
  try {
    p = pn.as<std::uint64_t>();
  } catch (const YAML::Exception&) {
    fail(origin, pn, "schema error: prime must be an integer");
  }
  PrimeModulus mod = [&] {
    try {
      return PrimeModulus(p);
    } catch (const InputError& e) {
      fail(origin, pn, e.what());
    }
  }();

  YAML::Node vn = required(origin, root, "variables");
  if (!vn.IsSequence() || vn.size() == 0) fail(origin, vn, "schema error: 'variables' must be a nonempty list");
  std::vector<Variable> vars;
  std::set<std::string> seen;
  for (const auto& v : vn) {
    if (!v.IsMap() || !v["name"] || !v["weight"]) fail(origin, v, "schema error: variable needs 'name' and 'weight'");
    std::string name = scalar(origin, v["name"], "name");
    unsigned w = 0;
    try {
      w = v["weight"].as<unsigned>();
    } catch (const YAML::Exception&) {
      fail(origin, v["weight"], "schema error: weight must be 0 or 1");
    }
    if (w > 1) fail(origin, v["weight"], "schema error: weight must be 0 or 1");
    if (!seen.insert(name).second) fail(origin, v, "schema error: duplicate variable '" + name + "'");
    vars.push_back({name, w});
  }
  PolyRingPtr ring = [&] {
    try {
      return PolyRing::make(mod, vars);
    } catch (const InputError& e) {
      fail(origin, vn, std::string("schema error: ") + e.what());
    }
  }();

  std::vector<MultiPoly> relations;
  if (YAML::Node rn = root["relations"]) {
    relations = parse_list(origin, rn, ring, "relations");
    for (std::size_t i = 0; i < relations.size(); ++i) {
      if (relations[i].is_zero()) fail(origin, rn[i], "relation is zero");
      if (!weighted_degree(relations[i])) fail(origin, rn[i], "relation not homogeneous");
    }
  }
  auto spec = make_ring_spec(ring, relations);

  YAML::Node in = required(origin, root, "ideal");
  auto gens = parse_list(origin, in, ring, "ideal");
  if (gens.empty()) fail(origin, in, "schema error: 'ideal' must be nonempty");

  std::vector<MultiPoly> prime;
  if (YAML::Node mp = root["minimal_prime"]) {
    prime = parse_list(origin, mp, ring, "minimal_prime");
    Ideal P(make_ring_spec(ring), prime);
    for (std::size_t i = 0; i < relations.size(); ++i)
      if (!contains(P, relations[i])) fail(origin, root["relations"][i], "relation is not in the recorded minimal prime");
  }

  FamilyKind kind = FamilyKind::custom;
  if (YAML::Node fn = root["family"]) {
    auto k = parse_family_name(scalar(origin, fn, "family"));
    if (!k) fail(origin, fn, "schema error: unknown family '" + fn.Scalar() + "'");
    kind = *k;
    if (kind == FamilyKind::brenner_monsky && p != 2) fail(origin, fn, "brenner_monsky requires p = 2");
  }

  std::ostringstream src;
  for (std::size_t i = 0; i < relations.size(); ++i) src << (i ? ", " : "") << relations[i].to_string();
  return FamilySpec{kind, spec, Ideal(spec, gens), std::nullopt, prime, src.str()};
}

}  // namespace

FamilySpec parse_ring_text(const std::string& text, const std::string& origin) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::ParserException& e) {
    throw ParseError(origin + ": " + e.msg, static_cast<std::size_t>(e.mark.column) + 1,
                     static_cast<std::size_t>(e.mark.line) + 1);
  }
  return build(root, origin);
}

FamilySpec load_ring_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open ring file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_ring_text(buf.str(), path);
}

}  // namespace frobgrow::cli
