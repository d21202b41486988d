#include "frobgrow/order.hpp"

#include <algorithm>

#include "frobgrow/errors.hpp"

namespace frobgrow {
namespace {

void check_permutation(const std::vector<std::size_t>& rank) {
  if (rank.size() > kMaxVars) throw InputError("too many variables for a monomial order");
  std::vector<bool> seen(rank.size(), false);
  for (auto v : rank) {
    if (v >= rank.size() || seen[v]) throw InputError("monomial order rank is not a permutation of the variables");
    seen[v] = true;
  }
}

}  // namespace

MonomialOrder MonomialOrder::grevlex(std::vector<std::size_t> rank, std::vector<unsigned> weights) {
  check_permutation(rank);
  MonomialOrder o;
  o.kind_ = OrderKind::grevlex;
  o.n_ = rank.size();
  o.weighted_ = !weights.empty();
  if (o.weighted_ && weights.size() != rank.size()) throw InputError("weight vector length mismatch");
  o.rank_ = std::move(rank);
  o.weight_ = std::move(weights);
  return o;
}

MonomialOrder MonomialOrder::lex(std::vector<std::size_t> rank) {
  check_permutation(rank);
  MonomialOrder o;
  o.kind_ = OrderKind::lex;
  o.n_ = rank.size();
  o.rank_ = std::move(rank);
  return o;
}

MonomialOrder MonomialOrder::block(std::vector<std::size_t> rank, std::size_t front, std::vector<unsigned> weights) {
  MonomialOrder o = grevlex(std::move(rank), std::move(weights));
  if (front > o.n_) throw InputError("block boundary beyond the variable count");
  o.kind_ = OrderKind::block;
  o.front_ = front;
  return o;
}

std::string MonomialOrder::key() const {
  std::string k;
  switch (kind_) {
    case OrderKind::grevlex: k = "grevlex"; break;
    case OrderKind::lex: k = "lex"; break;
    case OrderKind::block: k = "block" + std::to_string(front_); break;
  }
  k += weighted_ ? "w[" : "[";
  for (std::size_t i = 0; i < n_; ++i) {
    k += std::to_string(rank_[i]);
    if (weighted_) k += ":" + std::to_string(weight_[rank_[i]]);
    k += i + 1 < n_ ? "," : "]";
  }
  return k;
}

}  // namespace frobgrow
