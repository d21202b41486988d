#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frobgrow/monomial.hpp"
#include "frobgrow/order.hpp"
#include "frobgrow/polyring.hpp"
#include "frobgrow/unipoly.hpp"

namespace frobgrow {

struct Term {
  Monomial m;
  std::uint32_t c;

  friend bool operator==(const Term& a, const Term& b) { return a.c == b.c && a.m == b.m; }
};

/// Sparse polynomial over F_p: nonzero terms strictly decreasing in its order.
class MultiPoly {
 public:
  explicit MultiPoly(PolyRingPtr ring);
  MultiPoly(PolyRingPtr ring, OrderPtr order);

  static MultiPoly constant(PolyRingPtr ring, std::uint32_t c);
  static MultiPoly variable(PolyRingPtr ring, std::size_t index);
  static MultiPoly term(PolyRingPtr ring, const Monomial& m, std::uint32_t c);
  /// Sorts, merges duplicate monomials and drops zero coefficients.
  static MultiPoly from_terms(PolyRingPtr ring, OrderPtr order, std::vector<Term> terms);
  /// Terms must already be canonical for `order`.
  static MultiPoly from_sorted(PolyRingPtr ring, OrderPtr order, std::vector<Term> terms);

  const PolyRingPtr& ring() const { return ring_; }
  const OrderPtr& order() const { return order_; }
  const PrimeModulus& modulus() const { return ring_->modulus(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }
  const Term& lead() const { return terms_.front(); }
  /// Largest total degree of a term; 0 for zero.
  std::uint32_t total_degree() const;
  /// Degree in a single variable.
  std::uint32_t degree_in(std::size_t var) const;
  bool involves(std::size_t var) const { return degree_in(var) > 0; }

  MultiPoly with_order(OrderPtr order) const;
  MultiPoly monic() const;
  MultiPoly scaled(std::uint32_t c) const;
  MultiPoly mul_term(const Monomial& m, std::uint32_t c) const;
  MultiPoly pow(std::uint64_t e) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly operator-() const { return scaled(modulus().value() - 1); }

  /// Same ring, same order, same terms.
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  /// Canonical text: terms in descending order joined by '+', coefficient
  /// residues in [0, p) (omitted when 1 on a non-constant term), factors joined
  /// by '*', variables in declaration order as name or name^k. Zero is "0".
  std::string to_string() const;

 private:
  PolyRingPtr ring_;
  OrderPtr order_;
  std::vector<Term> terms_;
};

enum class ArithOp { add, sub, mul };
/// Canonical a op b; throws ModulusMismatch when rings differ.
MultiPoly multi_arith(const MultiPoly& a, const MultiPoly& b, ArithOp op);

/// a / b when b divides a exactly; throws std::domain_error otherwise.
MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b);

/// The common weighted degree of all terms, or nullopt for a non-homogeneous
/// polynomial. The zero polynomial reports 0.
std::optional<unsigned> weighted_degree(const MultiPoly& f);

/// Embeds a polynomial in k[var] into the ring.
MultiPoly from_uni(const UniPoly& u, const PolyRingPtr& ring, std::size_t var);
/// Requires f to involve no variable other than `var`.
UniPoly to_uni(const MultiPoly& f, std::size_t var);
/// True when no variable outside `allowed` occurs.
bool only_involves(const MultiPoly& f, const std::vector<std::size_t>& allowed);
/// Moves f into a ring with the same leading variables (extra or dropped trailing
/// variables must have zero exponent); result uses the target's default order.
MultiPoly change_ring(const MultiPoly& f, const PolyRingPtr& target);

namespace kernel {

/// f[fi..] + c * m * g[gi..]; all inputs sorted by `order`.
std::vector<Term> axpy(const std::vector<Term>& f, std::size_t fi, const std::vector<Term>& g, std::size_t gi,
                       const Monomial& m, std::uint32_t c, const MonomialOrder& order, const PrimeModulus& p);
void sort_terms(std::vector<Term>& terms, const MonomialOrder& order, const PrimeModulus& p);

}  // namespace kernel

}  // namespace frobgrow
