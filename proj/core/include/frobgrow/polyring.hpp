#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "frobgrow/modulus.hpp"
#include "frobgrow/order.hpp"

namespace frobgrow {

/// A ring variable and its grading weight: 0 for the coefficient block (t),
/// 1 for the graded variables (x_i).
struct Variable {
  std::string name;
  unsigned weight = 1;

  friend bool operator==(const Variable&, const Variable&) = default;
};

class PolyRing;
using PolyRingPtr = std::shared_ptr<const PolyRing>;

/// F_p[variables] with a default monomial order: grevlex with the weight-1
/// variables first (in declaration order) and the weight-0 block last.
class PolyRing {
 public:
  /// Validates: unique identifier names, weights in {0, 1}, at most kMaxVars variables.
  static PolyRingPtr make(PrimeModulus p, std::vector<Variable> vars);

  const PrimeModulus& modulus() const { return p_; }
  const std::vector<Variable>& variables() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const std::string& name(std::size_t i) const { return vars_[i].name; }
  unsigned weight(std::size_t i) const { return vars_[i].weight; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  std::vector<std::size_t> graded_vars() const;       // weight 1
  std::vector<std::size_t> coefficient_vars() const;  // weight 0
  std::vector<unsigned> weights() const;

  const OrderPtr& default_order() const { return order_; }
  /// Default ranking: weight-1 variables, then weight-0 variables.
  std::vector<std::size_t> default_rank() const;

  /// This ring with one extra weight-0 variable appended.
  PolyRingPtr with_extra_variable(std::string name) const;

  friend bool operator==(const PolyRing& a, const PolyRing& b) { return a.p_ == b.p_ && a.vars_ == b.vars_; }

 private:
  PolyRing(PrimeModulus p, std::vector<Variable> vars);

  PrimeModulus p_;
  std::vector<Variable> vars_;
  OrderPtr order_;
};

/// Throws ModulusMismatch("ring mismatch") unless the rings coincide.
void require_same_ring(const PolyRing& a, const PolyRing& b);

}  // namespace frobgrow
