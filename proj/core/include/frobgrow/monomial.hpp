#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace frobgrow {

inline constexpr std::size_t kMaxVars = 10;
inline constexpr std::uint32_t kMaxExponent = (1u << 16) - 1;

/// Exponent vector over at most kMaxVars variables. Lanes beyond the ring's
/// variable count stay zero, so comparisons can run over every lane.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : n_(static_cast<std::uint8_t>(nvars)) {}

  std::size_t size() const { return n_; }
  std::uint16_t operator[](std::size_t i) const { return e_[i]; }
  /// Throws InputError when e exceeds the exponent width.
  void set(std::size_t i, std::uint32_t e);

  std::uint32_t total_degree() const {
    std::uint32_t d = 0;
    for (auto x : e_) d += x;
    return d;
  }
  bool is_one() const {
    for (auto x : e_)
      if (x) return false;
    return true;
  }
  /// Bit i set iff variable i occurs.
  std::uint32_t support_mask() const {
    std::uint32_t m = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (e_[i]) m |= 1u << i;
    return m;
  }

  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }
  bool coprime(const Monomial& o) const {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (e_[i] && o.e_[i]) return false;
    return true;
  }

  /// Product; throws InputError on exponent overflow.
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Quotient a / b; b must divide a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_ && a.n_ == b.n_; }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ULL;
    for (auto x : e_) h = (h ^ x) * 1099511628211ULL;
    return h;
  }

 private:
  std::array<std::uint16_t, kMaxVars> e_{};
  std::uint8_t n_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace frobgrow
