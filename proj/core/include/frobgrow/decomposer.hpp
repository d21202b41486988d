#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "frobgrow/factor.hpp"
#include "frobgrow/hq.hpp"
#include "frobgrow/ideal.hpp"
#include "frobgrow/sequences.hpp"

namespace frobgrow {

enum class FamilyKind { katzman, ss5, ss7, brenner_monsky, custom };
std::string family_name(FamilyKind kind);
std::optional<FamilyKind> parse_family_name(std::string_view name);

struct FamilySpec {
  FamilyKind kind;
  RingSpecPtr ring;
  Ideal ideal;
  std::optional<SequenceSpec> sequence;
  /// Generators of the known minimal prime of I (fixture data).
  std::vector<MultiPoly> minimal_prime;
  /// The defining relation written as a product / in the (ux, vy, wz) variables.
  std::string relation_source;

  std::string name() const { return family_name(kind); }
  unsigned graded_vars() const { return static_cast<unsigned>(ring->ring()->graded_vars().size()); }
};

/// k[t,x,y]/(xy(x-y)(x-ty)), I = (x, y).
FamilySpec katzman_family(PrimeModulus p);
/// k[t,u,v,x,y]/(r0 u^2x^2 + r1 uxvy + r2 v^2y^2), I = (u, v, x, y); default r = (1, t, 1).
FamilySpec ss5_family(const SequenceSpec& spec);
FamilySpec ss5_family(PrimeModulus p);
/// k[t,u,v,w,x,y,z]/(u^2x^2 + v^2y^2 + tuxvy + tw^2z^2), I = (u, v, w, x, y, z).
FamilySpec ss7_family(PrimeModulus p);
/// k[t,x,y,z]/(z^4 + z^2xy + zx^3 + zy^3 + tx^2y^2), I = (x, y, z); characteristic 2 only.
FamilySpec brenner_monsky_family(PrimeModulus p);
FamilySpec named_family(FamilyKind kind, PrimeModulus p, const std::optional<SequenceSpec>& spec = std::nullopt);

struct PrimaryComponent {
  Ideal ideal;
  std::vector<MultiPoly> radical_generators;
  std::optional<std::pair<UniPoly, unsigned>> tau;
  std::optional<unsigned> measured_exponent;
};

struct SanityVerdict {
  bool pass = true;
  std::string witness;
};

struct DecompositionOptions {
  bool measure_exponents = true;
  unsigned sanity_panel = 10;
  std::uint64_t seed = 1;
};

struct DecompositionReport {
  std::string family;
  PrimePower q;
  unsigned graded_vars = 0;
  std::string h_source;
  UniPoly h;
  FactorList h_factors;
  std::optional<HqCertificate> certificate;
  PrimaryComponent isolated;
  std::vector<PrimaryComponent> embedded;
  std::vector<UniPoly> dropped_factors;
  bool intersection_verified = false;
  std::string intersection_witness;
  bool growth_bound_checked = false;
  /// isolated first, then the embedded components in order.
  std::vector<SanityVerdict> sanity;
  double seconds = 0;

  bool sanity_passed() const;
  bool verified() const { return intersection_verified && growth_bound_checked && sanity_passed(); }
  /// n*q + s_i for an embedded component.
  std::uint64_t growth_bound(const PrimaryComponent& c) const;
  nlohmann::ordered_json to_json(bool timings) const;
  /// One row per component; `header` prepends the column names.
  std::string to_csv(bool header) const;
};

/// Q = I^[q] : h and Q_i = I^[q] + (tau_i^s_i) for the irreducible factors of h,
/// verified by intersecting back to I^[q]. Throws InputError when h = 0.
DecompositionReport stable_decomposition(const FamilySpec& fam, const PrimePower& q, const UniPoly& h,
                                         const DecompositionOptions& opts = {});

/// Least k with (radical)^k inside the component, by doubling then bisection.
unsigned growth_exponent(const PrimaryComponent& c);

/// Necessary conditions for primaryness: a power of each radical generator lies in
/// the ideal, and colon by `panel` random g(t) coprime to tau leaves it unchanged.
SanityVerdict primary_sanity(const PrimaryComponent& c, unsigned panel, std::uint64_t seed);

struct SaturationRow {
  PrimePower q;
  unsigned exponent;
};
struct SaturationGrowth {
  std::vector<SaturationRow> rows;
  /// max N_q / q.
  double max_ratio = 0;
};
SaturationGrowth saturation_growth(const FamilySpec& fam, const MultiPoly& z, const std::vector<PrimePower>& qs);

/// r0^(3q) r2^(3q) L_q, monic. Throws InputError unless r0 r2 != 0 and the degree condition holds.
UniPoly ss_hq_closed_form(const SequenceSpec& spec, const PrimePower& q);

/// (ux)(vy)^(q-2)uv for ss5 and (ux)(vy)^(q-2)uvw^(q-1) for ss7.
MultiPoly witness_element(const FamilySpec& fam, const PrimePower& q);
/// Monic generator of (I^[q] : witness) ∩ k[t]; zero when the contraction is zero.
UniPoly witness_colon(const FamilySpec& fam, const PrimePower& q);

struct SuiteItem {
  std::string part;
  std::string instance;
  bool pass;
  std::string witness;
};
struct SuiteReport {
  SequenceSpec spec;
  unsigned n;
  std::vector<SuiteItem> items;

  bool all_pass() const;
  nlohmann::ordered_json to_json() const;
};
/// Membership and colon-stability checks around I_n = (u^n, v^n, x^n, y^n, r0u^2x^2 + r1uxvy + r2v^2y^2).
SuiteReport lemma_membership_suite(const SequenceSpec& spec, unsigned n, std::uint64_t seed, unsigned panel = 10);

}  // namespace frobgrow
