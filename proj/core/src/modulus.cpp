#include "frobgrow/modulus.hpp"

#include <limits>

#include "frobgrow/errors.hpp"

namespace frobgrow {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

PrimeModulus::PrimeModulus(std::uint64_t p) : p_(0) {
  if (p < 2 || p >= (1ULL << 31)) throw InputError(std::to_string(p) + " is out of range for a prime modulus");
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
  p_ = static_cast<std::uint32_t>(p);
}

std::uint32_t PrimeModulus::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t result = 1 % p_;
  std::uint32_t base = a % p_;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::uint32_t PrimeModulus::inv(std::uint32_t a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of zero in F_p");
  std::int64_t r0 = p_, r1 = a % p_, s0 = 0, s1 = 1;
  while (r1) {
    std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  return reduce(s0);
}

PrimePower PrimePower::make(PrimeModulus p, unsigned e) {
  std::uint64_t q = 1;
  const std::uint64_t limit = std::numeric_limits<std::int64_t>::max();
  for (unsigned i = 0; i < e; ++i) {
    if (q > limit / p.value()) throw InputError("p^e overflows the machine word");
    q *= p.value();
  }
  return PrimePower{p, e, q};
}

PrimePower PrimePower::from_value(PrimeModulus p, std::uint64_t q) {
  if (q == 0) throw InputError("q must be a positive power of p");
  unsigned e = 0;
  std::uint64_t r = q;
  while (r % p.value() == 0) {
    r /= p.value();
    ++e;
  }
  if (r != 1) throw InputError(std::to_string(q) + " is not a power of " + std::to_string(p.value()));
  return PrimePower{p, e, q};
}

void require_same_modulus(const PrimeModulus& a, const PrimeModulus& b) {
  if (!(a == b))
    throw ModulusMismatch("modulus mismatch: " + std::to_string(a.value()) + " vs " + std::to_string(b.value()));
}

}  // namespace frobgrow
