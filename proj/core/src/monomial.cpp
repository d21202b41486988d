#include "frobgrow/monomial.hpp"

#include <algorithm>
#include <string>

#include "frobgrow/errors.hpp"

namespace frobgrow {

void Monomial::set(std::size_t i, std::uint32_t e) {
  if (e > kMaxExponent) throw InputError("exponent " + std::to_string(e) + " exceeds the 16-bit exponent width");
  e_[i] = static_cast<std::uint16_t>(e);
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r(a.n_);
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    std::uint32_t s = std::uint32_t(a.e_[i]) + b.e_[i];
    if (s > kMaxExponent) throw InputError("exponent overflow in monomial product");
    r.e_[i] = static_cast<std::uint16_t>(s);
  }
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r(a.n_);
  for (std::size_t i = 0; i < kMaxVars; ++i) r.e_[i] = static_cast<std::uint16_t>(a.e_[i] - b.e_[i]);
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.n_);
  for (std::size_t i = 0; i < kMaxVars; ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
  return r;
}

}  // namespace frobgrow
