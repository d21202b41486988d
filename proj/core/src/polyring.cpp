#include "frobgrow/polyring.hpp"

#include <cctype>
#include <set>

#include "frobgrow/errors.hpp"

namespace frobgrow {
namespace {

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

}  // namespace

PolyRing::PolyRing(PrimeModulus p, std::vector<Variable> vars) : p_(p), vars_(std::move(vars)) {
  order_ = std::make_shared<const MonomialOrder>(MonomialOrder::grevlex(default_rank(), weights()));
}

PolyRingPtr PolyRing::make(PrimeModulus p, std::vector<Variable> vars) {
  if (vars.size() > kMaxVars) throw InputError("at most " + std::to_string(kMaxVars) + " variables are supported");
  std::set<std::string> names;
  for (const auto& v : vars) {
    if (!is_identifier(v.name)) throw InputError("invalid variable name '" + v.name + "'");
    if (v.weight > 1) throw InputError("variable '" + v.name + "' has weight " + std::to_string(v.weight) + "; only 0 and 1 are supported");
    if (!names.insert(v.name).second) throw InputError("duplicate variable '" + v.name + "'");
  }
  return PolyRingPtr(new PolyRing(p, std::move(vars)));
}

std::optional<std::size_t> PolyRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name == name) return i;
  return std::nullopt;
}

std::vector<std::size_t> PolyRing::graded_vars() const {
  std::vector<std::size_t> r;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].weight == 1) r.push_back(i);
  return r;
}

std::vector<std::size_t> PolyRing::coefficient_vars() const {
  std::vector<std::size_t> r;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].weight == 0) r.push_back(i);
  return r;
}

std::vector<unsigned> PolyRing::weights() const {
  std::vector<unsigned> w;
  for (const auto& v : vars_) w.push_back(v.weight);
  return w;
}

std::vector<std::size_t> PolyRing::default_rank() const {
  auto r = graded_vars();
  for (auto i : coefficient_vars()) r.push_back(i);
  return r;
}

PolyRingPtr PolyRing::with_extra_variable(std::string name) const {
  auto vars = vars_;
  vars.push_back({std::move(name), 0});
  return make(p_, std::move(vars));
}

void require_same_ring(const PolyRing& a, const PolyRing& b) {
  if (&a != &b && !(a == b)) throw ModulusMismatch("ring mismatch");
}

}  // namespace frobgrow
