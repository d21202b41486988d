#include "frobgrow/hq.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "frobgrow/errors.hpp"
#include "frobgrow/multipoly.hpp"

namespace frobgrow {
namespace {

// Monomials in the listed variables with total degree `deg`, optionally with every exponent < cap.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, const std::vector<std::size_t>& vars, unsigned deg,
                                          std::uint64_t cap) {
  std::vector<Monomial> out;
  Monomial cur(nvars);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t k, unsigned left) {
    if (k + 1 == vars.size()) {
      if (left < cap) {
        cur.set(vars[k], left);
        out.push_back(cur);
        cur.set(vars[k], 0);
      }
      return;
    }
    for (unsigned e = 0; e <= left && e < cap; ++e) {
      cur.set(vars[k], e);
      rec(k + 1, left - e);
    }
    cur.set(vars[k], 0);
  };
  if (vars.empty()) {
    if (deg == 0) out.push_back(cur);
    return out;
  }
  rec(0, deg);
  return out;
}

class Bits {
 public:
  explicit Bits(std::size_t n = 0) : w_((n + 63) / 64, 0) {}
  void set(std::size_t i) { w_[i / 64] |= 1ULL << (i % 64); }
  bool test(std::size_t i) const { return w_[i / 64] >> (i % 64) & 1; }
  Bits& operator|=(const Bits& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < w_.size(); ++i)
      for (std::uint64_t x = w_[i]; x; x &= x - 1) out.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(x)));
    return out;
  }

 private:
  std::vector<std::uint64_t> w_;
};

struct BudgetStop {};

// Enumerates the square submatrices of one connected block.
class BlockMinors {
 public:
  BlockMinors(const PolyMatrix& m, std::vector<std::size_t> rows, std::vector<std::size_t> cols, const Budget& budget,
              const Deadline* deadline, MinorsResult& result)
      : m_(m), rows_(std::move(rows)), cols_(std::move(cols)), budget_(budget), deadline_(deadline), result_(result),
        acc_(UniPoly::constant(m.modulus(), 1)) {
    support_.assign(rows_.size(), Bits(cols_.size()));
    nz_.assign(rows_.size(), std::vector<char>(cols_.size(), 0));
    for (std::size_t i = 0; i < rows_.size(); ++i)
      for (std::size_t j = 0; j < cols_.size(); ++j)
        if (!m_.at(rows_[i], cols_[j]).is_zero()) {
          support_[i].set(j);
          nz_[i][j] = 1;
        }
  }

  UniPoly run() {
    const std::size_t kmax = std::min(rows_.size(), cols_.size());
    for (std::size_t k = 1; k <= kmax; ++k) {
      chosen_rows_.clear();
      rows_dfs(0, k, Bits(cols_.size()));
    }
    return acc_;
  }

  const UniPoly& partial_lcm() const { return acc_; }

 private:
  void rows_dfs(std::size_t start, std::size_t k, const Bits& support) {
    if (chosen_rows_.size() == k) {
      auto cand = support.members();
      if (cand.size() < k) return;
      chosen_cols_.clear();
      cols_dfs(cand, 0, k);
      return;
    }
    for (std::size_t i = start; i + (k - chosen_rows_.size()) <= rows_.size(); ++i) {
      chosen_rows_.push_back(i);
      Bits next = support;
      next |= support_[i];
      rows_dfs(i + 1, k, next);
      chosen_rows_.pop_back();
    }
  }

  void cols_dfs(const std::vector<std::size_t>& cand, std::size_t start, std::size_t k) {
    if (chosen_cols_.size() == k) {
      visit();
      return;
    }
    for (std::size_t j = start; j + (k - chosen_cols_.size()) <= cand.size(); ++j) {
      chosen_cols_.push_back(cand[j]);
      cols_dfs(cand, j + 1, k);
      chosen_cols_.pop_back();
    }
  }

  bool has_perfect_matching() {
    const std::size_t k = chosen_rows_.size();
    match_.assign(k, -1);
    for (std::size_t r = 0; r < k; ++r) {
      seen_.assign(k, 0);
      if (!augment(r)) return false;
    }
    return true;
  }

  bool augment(std::size_t r) {
    for (std::size_t c = 0; c < chosen_cols_.size(); ++c) {
      if (!nz_[chosen_rows_[r]][chosen_cols_[c]] || seen_[c]) continue;
      seen_[c] = 1;
      if (match_[c] < 0 || augment(static_cast<std::size_t>(match_[c]))) {
        match_[c] = static_cast<int>(r);
        return true;
      }
    }
    return false;
  }

  void visit() {
    if (result_.examined >= budget_.minor_subsets) throw BudgetStop{};
    ++result_.examined;
    if ((result_.examined & 1023) == 0 && deadline_ && deadline_->expired()) throw BudgetStop{};
    if (!has_perfect_matching()) return;
    std::vector<std::size_t> r, c;
    for (auto i : chosen_rows_) r.push_back(rows_[i]);
    for (auto j : chosen_cols_) c.push_back(cols_[j]);
    UniPoly det = determinant(m_.submatrix(r, c));
    ++result_.determinants;
    if (det.is_zero() || divides(det, acc_)) return;
    acc_ = uni_lcm(acc_, det);
  }

  const PolyMatrix& m_;
  std::vector<std::size_t> rows_, cols_;
  const Budget& budget_;
  const Deadline* deadline_;
  MinorsResult& result_;
  UniPoly acc_;
  std::vector<Bits> support_;
  std::vector<std::vector<char>> nz_;
  std::vector<std::size_t> chosen_rows_, chosen_cols_;
  std::vector<int> match_;
  std::vector<char> seen_;
};

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

MinorMatrix build_Md(const RingSpec& ring, const PrimePower& q, unsigned d) {
  const auto& R = *ring.ring();
  require_same_modulus(q.p, R.modulus());
  const std::size_t t = ring.coefficient_var();
  const auto graded = R.graded_vars();
  const std::size_t n = graded.size();
  if (d < 1 || d > n * (q.q - 1)) throw InputError("build_Md: d must lie in 1..n(q-1)");

  struct Rel {
    unsigned degree;
    std::vector<std::pair<Monomial, UniPoly>> coeffs;  // v -> A_{i,v}
  };
  std::vector<Rel> rels;
  for (const auto& f : ring.relations()) {
    auto deg = weighted_degree(f);
    if (!deg) throw InputError("relation not homogeneous: " + f.to_string());
    if (*deg == 0) throw InputError("relation of degree zero: " + f.to_string());
    std::map<std::vector<std::uint16_t>, std::pair<Monomial, UniPoly>> by_v;
    for (const auto& term : f.terms()) {
      Monomial v = term.m;
      const unsigned te = term.m[t];
      v.set(t, 0);
      std::vector<std::uint16_t> key(R.nvars());
      for (std::size_t i = 0; i < R.nvars(); ++i) key[i] = v[i];
      auto [it, fresh] = by_v.try_emplace(key, v, UniPoly(R.modulus()));
      it->second.second += UniPoly::monomial(R.modulus(), term.c, te);
    }
    Rel rel{*deg, {}};
    for (auto& [k, vc] : by_v) rel.coeffs.push_back(std::move(vc));
    rels.push_back(std::move(rel));
  }

  const auto& order = *R.default_order();
  auto desc = [&](const Monomial& a, const Monomial& b) { return order.compare(a, b) > 0; };

  MinorMatrix M{d, monomials_of_degree(R.nvars(), graded, d, q.q), {}, PolyMatrix(R.modulus(), 0, 0)};
  std::sort(M.rows.begin(), M.rows.end(), desc);
  std::unordered_map<Monomial, std::size_t, MonomialHash> row_index;
  for (std::size_t i = 0; i < M.rows.size(); ++i) row_index.emplace(M.rows[i], i);

  for (std::size_t i = 0; i < rels.size(); ++i) {
    if (rels[i].degree > d) continue;
    auto ws = monomials_of_degree(R.nvars(), graded, d - rels[i].degree, UINT64_MAX);
    std::sort(ws.begin(), ws.end(), desc);
    for (auto& w : ws) M.cols.push_back({i, w});
  }
  M.entries = PolyMatrix(R.modulus(), M.rows.size(), M.cols.size());
  for (std::size_t c = 0; c < M.cols.size(); ++c) {
    const auto& col = M.cols[c];
    for (const auto& [v, a] : rels[col.relation].coeffs) {
      Monomial u = col.w * v;
      if (auto it = row_index.find(u); it != row_index.end()) M.entries.at(it->second, c) = a;
    }
  }
  return M;
}

MinorsResult minors_lcm(const PolyMatrix& m, const Budget& budget, const Deadline* deadline) {
  const std::size_t R = m.rows(), C = m.cols();
  MinorsResult result{UniPoly::constant(m.modulus(), 1), 0, 0, false};
  std::vector<std::size_t> parent(R + C);
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<char> live(R + C, 0);
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < C; ++j)
      if (!m.at(i, j).is_zero()) {
        live[i] = live[R + j] = 1;
        parent[find_root(parent, i)] = find_root(parent, R + j);
      }
  std::map<std::size_t, std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> blocks;  // keyed by first row
  std::unordered_map<std::size_t, std::size_t> root_to_key;
  for (std::size_t i = 0; i < R; ++i) {
    if (!live[i]) continue;
    auto root = find_root(parent, i);
    auto [it, fresh] = root_to_key.try_emplace(root, i);
    blocks[it->second].first.push_back(i);
  }
  for (std::size_t j = 0; j < C; ++j) {
    if (!live[R + j]) continue;
    blocks[root_to_key.at(find_root(parent, R + j))].second.push_back(j);
  }
  for (auto& [key, rc] : blocks) {
    BlockMinors block(m, rc.first, rc.second, budget, deadline, result);
    try {
      result.lcm = result.lcm * block.run();
    } catch (const BudgetStop&) {
      result.lcm = result.lcm * block.partial_lcm();
      result.partial = true;
      break;
    }
  }
  result.lcm = result.lcm.monic();
  return result;
}

nlohmann::ordered_json HqCertificate::to_json() const {
  nlohmann::ordered_json j;
  j["p"] = q.p.value();
  j["e"] = q.e;
  j["q"] = q.q;
  j["graded_vars"] = graded_vars;
  j["h"] = h.to_string();
  j["h_coefficients"] = h.coeffs();
  auto factors = nlohmann::ordered_json::array();
  for (const auto& [tau, s] : factorization.factors)
    factors.push_back({{"factor", tau.to_string()}, {"multiplicity", s}});
  j["factors"] = factors;
  j["s_max"] = s_max;
  j["bound_constant"] = {{"numerator", bound_numerator}, {"denominator", bound_denominator}, {"value", bound_constant()}};
  j["minors_examined"] = minors_examined;
  j["budget_exhausted"] = budget_exhausted;
  j["status"] = budget_exhausted ? "PARTIAL" : "COMPLETE";
  auto degrees_json = nlohmann::ordered_json::array();
  for (const auto& s : degrees)
    degrees_json.push_back({{"d", s.d}, {"rows", s.rows}, {"cols", s.cols}, {"examined", s.examined}, {"partial", s.partial}});
  j["degrees"] = degrees_json;
  return j;
}

HqCertificate h_q(const RingSpec& ring, const PrimePower& q, const Budget& budget, std::uint64_t seed) {
  const auto graded = ring.ring()->graded_vars();
  const unsigned n = static_cast<unsigned>(graded.size());
  if (n == 0) throw InputError("h_q: ring has no weight-1 variables");
  HqCertificate cert{q, n, UniPoly::constant(q.p, 1), {}, 0, 0, 1, 0, false, {}};
  Deadline deadline(budget.wall_seconds);
  const std::uint64_t top = static_cast<std::uint64_t>(n) * (q.q - 1);
  for (std::uint64_t d = 1; d <= top; ++d) {
    if (deadline.expired()) {
      cert.budget_exhausted = true;
      break;
    }
    MinorMatrix M = build_Md(ring, q, static_cast<unsigned>(d));
    MinorsResult r = minors_lcm(M.entries, budget, &deadline);
    cert.h = uni_lcm(cert.h, r.lcm);
    cert.minors_examined += r.examined;
    cert.budget_exhausted = cert.budget_exhausted || r.partial;
    cert.degrees.push_back({static_cast<unsigned>(d), M.rows.size(), M.cols.size(), r.examined, r.partial});
  }
  cert.factorization = uni_factor(cert.h, seed);
  cert.s_max = cert.factorization.max_multiplicity();
  cert.bound_numerator = cert.s_max;
  cert.bound_denominator = 1;
  for (unsigned i = 1; i < n; ++i) cert.bound_denominator *= q.q;
  return cert;
}

std::vector<UniPoly> minor_lift(const PolyMatrix& A, const std::vector<UniPoly>& sums) {
  const std::size_t k = A.rows(), l = A.cols();
  const PrimeModulus p = A.modulus();
  if (sums.size() != k) throw InputError("minor_lift: expected one sum per row");
  RankProfile rp = rank_profile(A);

  PolyMatrix B(p, l, l);
  std::vector<UniPoly> rhs(l, UniPoly(p));
  std::vector<char> pivot_col(l, 0);
  for (auto c : rp.cols) pivot_col[c] = 1;
  std::size_t row = 0;
  for (auto r : rp.rows) {
    for (std::size_t j = 0; j < l; ++j) B.at(row, j) = A.at(r, j);
    rhs[row++] = sums[r];
  }
  for (std::size_t j = 0; j < l; ++j)
    if (!pivot_col[j]) B.at(row++, j) = UniPoly::constant(p, 1);

  const UniPoly D = determinant(B);
  std::vector<UniPoly> x(l, UniPoly(p));
  for (std::size_t j = 0; j < l; ++j) {
    PolyMatrix Bj = B;
    for (std::size_t i = 0; i < l; ++i) Bj.at(i, j) = rhs[i];
    try {
      x[j] = exact_div(determinant(Bj), D);
    } catch (const std::domain_error&) {
      throw InputError("minor_lift: Cramer numerator for column " + std::to_string(j) +
                       " is not divisible by the minor " + D.to_string());
    }
  }
  auto check = A.apply(x);
  for (std::size_t i = 0; i < k; ++i)
    if (!(check[i] == sums[i]))
      throw InputError("minor_lift: inconsistent system at row " + std::to_string(i) + " (minor " + D.to_string() +
                       ")");
  return x;
}

}  // namespace frobgrow
