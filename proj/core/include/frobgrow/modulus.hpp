#pragma once

#include <cstdint>
#include <string>

namespace frobgrow {

/// The characteristic p of the prime field F_p, 2 <= p < 2^31.
class PrimeModulus {
 public:
  /// Throws InputError unless p is a prime in range (trial division).
  explicit PrimeModulus(std::uint64_t p);

  std::uint32_t value() const { return p_; }

  std::uint32_t reduce(std::int64_t a) const {
    std::int64_t r = a % static_cast<std::int64_t>(p_);
    return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;  // p < 2^31, no overflow
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  /// Multiplicative inverse; a must be nonzero.
  std::uint32_t inv(std::uint32_t a) const;

  friend bool operator==(const PrimeModulus& a, const PrimeModulus& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

/// q = p^e; construction fails if q does not fit in 63 bits.
struct PrimePower {
  PrimeModulus p;
  unsigned e;
  std::uint64_t q;

  static PrimePower make(PrimeModulus p, unsigned e);
  /// Accepts q only if it is an exact power of p (q >= 1).
  static PrimePower from_value(PrimeModulus p, std::uint64_t q);
};

/// Throws ModulusMismatch when the two fields differ.
void require_same_modulus(const PrimeModulus& a, const PrimeModulus& b);

}  // namespace frobgrow
