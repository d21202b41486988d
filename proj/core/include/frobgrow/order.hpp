#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "frobgrow/monomial.hpp"

namespace frobgrow {

enum class OrderKind { grevlex, lex, block };

/// A monomial order over a fixed variable count.
///
/// `rank` lists variable indices from most to least significant. For grevlex the
/// comparison is: weighted degree (when `weighted`), total degree, then reverse
/// lexicographic along `rank`. A block order compares the first `front` ranked
/// variables by grevlex and breaks ties with the remaining block, which uses the
/// grevlex rule above; such an order eliminates the front block.
class MonomialOrder {
 public:
  static MonomialOrder grevlex(std::vector<std::size_t> rank, std::vector<unsigned> weights = {});
  static MonomialOrder lex(std::vector<std::size_t> rank);
  static MonomialOrder block(std::vector<std::size_t> rank, std::size_t front, std::vector<unsigned> weights = {});

  OrderKind kind() const { return kind_; }
  std::size_t nvars() const { return n_; }
  std::size_t front() const { return front_; }
  const std::vector<std::size_t>& rank() const { return rank_; }
  bool weighted() const { return weighted_; }

  /// < 0, 0, > 0 as a is smaller, equal, or larger than b.
  int compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
      case OrderKind::lex:
        for (std::size_t i = 0; i < n_; ++i) {
          auto v = rank_[i];
          if (a[v] != b[v]) return a[v] > b[v] ? 1 : -1;
        }
        return 0;
      case OrderKind::grevlex:
        return graded_revlex(a, b, 0, n_, weighted_);
      case OrderKind::block: {
        int c = graded_revlex(a, b, 0, front_, false);
        return c != 0 ? c : graded_revlex(a, b, front_, n_, weighted_);
      }
    }
    return 0;
  }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  /// Sugar degree used for pair selection: weighted degree for weighted orders,
  /// total degree otherwise.
  std::uint32_t sugar_degree(const Monomial& m) const {
    if (!weighted_) return m.total_degree();
    std::uint32_t d = 0;
    for (std::size_t i = 0; i < n_; ++i) d += weight_[i] * m[i];
    return d;
  }

  /// Stable textual key (used to index basis caches).
  std::string key() const;

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) { return a.key() == b.key(); }

 private:
  int graded_revlex(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi, bool weighted) const {
    if (weighted) {
      std::uint32_t da = 0, db = 0;
      for (std::size_t i = lo; i < hi; ++i) {
        da += weight_[rank_[i]] * a[rank_[i]];
        db += weight_[rank_[i]] * b[rank_[i]];
      }
      if (da != db) return da > db ? 1 : -1;
    }
    std::uint32_t ta = 0, tb = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      ta += a[rank_[i]];
      tb += b[rank_[i]];
    }
    if (ta != tb) return ta > tb ? 1 : -1;
    for (std::size_t i = hi; i-- > lo;) {
      auto v = rank_[i];
      if (a[v] != b[v]) return a[v] < b[v] ? 1 : -1;
    }
    return 0;
  }

  OrderKind kind_ = OrderKind::grevlex;
  std::size_t n_ = 0;
  std::size_t front_ = 0;
  bool weighted_ = false;
  std::vector<std::size_t> rank_;
  std::vector<unsigned> weight_;
};

using OrderPtr = std::shared_ptr<const MonomialOrder>;

}  // namespace frobgrow
