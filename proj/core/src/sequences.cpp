#include "frobgrow/sequences.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "frobgrow/errors.hpp"

namespace frobgrow {

SequenceSpec::SequenceSpec(UniPoly r0, UniPoly r1, UniPoly r2)
    : r0_(std::move(r0)), r1_(std::move(r1)), r2_(std::move(r2)) {
  require_same_modulus(r0_.modulus(), r1_.modulus());
  require_same_modulus(r1_.modulus(), r2_.modulus());
  if (r1_.is_zero()) throw InputError("sequence spec: r1 must be nonzero");
  degree_condition_ = r0_.is_zero() || r2_.is_zero() || 2 * r1_.degree() > r0_.degree() + r2_.degree();
}

std::string SequenceSpec::to_string() const {
  return "(" + r0_.to_string() + ", " + r1_.to_string() + ", " + r2_.to_string() + ")";
}

std::vector<UniPoly> p_seq_table(const SequenceSpec& spec, unsigned n) {
  std::vector<UniPoly> out;
  out.reserve(n + 1);
  out.push_back(UniPoly::constant(spec.modulus(), 1));
  if (n == 0) return out;
  out.push_back(spec.r1());
  const UniPoly r02 = spec.r0() * spec.r2();
  for (unsigned k = 1; k < n; ++k) out.push_back(spec.r1() * out[k] - r02 * out[k - 1]);
  return out;
}

UniPoly p_seq(const SequenceSpec& spec, unsigned n) { return p_seq_table(spec, n).back(); }

UniPoly tridiag_det(const SequenceSpec& spec, unsigned n) {
  if (n == 0) throw InputError("tridiag_det: n must be at least 1");
  if (n > 63) throw InputError("tridiag_det: n must be at most 63");
  const PrimeModulus p = spec.modulus();
  auto entry = [&](unsigned i, unsigned j) -> const UniPoly* {
    if (i == j) return &spec.r1();
    if (j == i + 1) return &spec.r0();
    if (i == j + 1) return &spec.r2();
    return nullptr;
  };
  std::unordered_map<std::uint64_t, UniPoly> memo;
  // det of rows popcount(used)..n-1 restricted to the columns not in `used`.
  auto det = [&](auto&& self, std::uint64_t used) -> UniPoly {
    const unsigned row = static_cast<unsigned>(std::popcount(used));
    if (row == n) return UniPoly::constant(p, 1);
    if (auto it = memo.find(used); it != memo.end()) return it->second;
    UniPoly acc(p);
    unsigned position = 0;
    for (unsigned j = 0; j < n; ++j) {
      if (used >> j & 1) continue;
      const UniPoly* a = entry(row, j);
      if (a && !a->is_zero()) {
        UniPoly minor = self(self, used | (1ULL << j));
        if (!minor.is_zero()) {
          UniPoly term = *a * minor;
          if (position % 2) {
            acc -= term;
          } else {
            acc += term;
          }
        }
      }
      ++position;
    }
    memo.emplace(used, acc);
    return acc;
  };
  return det(det, 0);
}

UniPoly big_L(const SequenceSpec& spec, unsigned n) {
  if (n == 0) throw InputError("big_L: n must be at least 1");
  auto table = p_seq_table(spec, n == 1 ? 0 : n - 1);
  UniPoly acc = UniPoly::constant(spec.modulus(), 1);
  for (unsigned i = 1; i < n; ++i) {
    if (table[i].is_zero())
      throw InputError("big_L: P_" + std::to_string(i) + " vanishes" +
                       (spec.degree_condition() ? std::string() : " (degree condition fails)"));
    acc = uni_lcm(acc, table[i]);
  }
  return acc;
}

Census factor_census(const std::vector<std::pair<std::string, UniPoly>>& polys, std::uint64_t seed) {
  Census c;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    const auto& [label, f] = polys[i];
    if (i > 0) require_same_modulus(polys[0].second.modulus(), f.modulus());
    if (f.is_zero()) throw InputError("census entry " + label + " is zero");
    FactorList fl = uni_factor(f, seed);
    for (const auto& [tau, s] : fl.factors) {
      c.distinct_irreducibles.push_back(tau);
      c.max_multiplicity = std::max(c.max_multiplicity, s);
    }
    c.entries.push_back({label, f, std::move(fl)});
  }
  auto& d = c.distinct_irreducibles;
  std::sort(d.begin(), d.end(), canonical_less);
  d.erase(std::unique(d.begin(), d.end()), d.end());
  return c;
}

}  // namespace frobgrow
