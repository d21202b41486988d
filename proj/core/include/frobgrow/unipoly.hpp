#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "frobgrow/modulus.hpp"

namespace frobgrow {

/// Dense polynomial in k[t], k = F_p. Coefficient i is the coefficient of t^i;
/// trailing zeros are always trimmed, so the zero polynomial has no coefficients.
class UniPoly {
 public:
  explicit UniPoly(PrimeModulus p) : p_(p) {}
  UniPoly(PrimeModulus p, std::vector<std::uint32_t> coeffs);
  /// Coefficients given as signed integers, reduced mod p.
  static UniPoly from_ints(PrimeModulus p, const std::vector<std::int64_t>& coeffs);
  static UniPoly constant(PrimeModulus p, std::uint32_t c);
  static UniPoly monomial(PrimeModulus p, std::uint32_t c, std::size_t degree);
  /// The polynomial t.
  static UniPoly var(PrimeModulus p) { return monomial(p, 1, 1); }

  const PrimeModulus& modulus() const { return p_; }
  const std::vector<std::uint32_t>& coeffs() const { return c_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_constant() const { return c_.size() <= 1; }
  std::uint32_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  std::uint32_t lead() const { return c_.empty() ? 0 : c_.back(); }

  UniPoly monic() const;
  UniPoly derivative() const;
  UniPoly pow(std::uint64_t e) const;
  std::uint32_t eval(std::uint32_t x) const;
  UniPoly scaled(std::uint32_t c) const;
  UniPoly shifted(std::size_t k) const;  // multiply by t^k

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly operator-() const;

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.p_ == b.p_ && a.c_ == b.c_; }

  /// Canonical text, e.g. "t^6+t^4+1"; zero prints as "0".
  std::string to_string(std::string_view var = "t") const;

 private:
  void trim();

  PrimeModulus p_;
  std::vector<std::uint32_t> c_;
};

/// Canonical ordering: by degree, then coefficient tuple from the top degree down.
bool canonical_less(const UniPoly& a, const UniPoly& b);

/// Quotient and remainder; b must be nonzero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
UniPoly operator%(const UniPoly& a, const UniPoly& b);
/// a / b, throwing std::domain_error when the division leaves a remainder.
UniPoly exact_div(const UniPoly& a, const UniPoly& b);
bool divides(const UniPoly& d, const UniPoly& a);

/// Monic gcd; gcd(0, 0) = 0.
UniPoly uni_gcd(const UniPoly& a, const UniPoly& b);
/// Monic lcm; both arguments must be nonzero (InputError otherwise).
UniPoly uni_lcm(const UniPoly& a, const UniPoly& b);
/// base^e mod m.
UniPoly powmod(const UniPoly& base, std::uint64_t e, const UniPoly& m);
/// (a*b) mod m.
UniPoly mulmod(const UniPoly& a, const UniPoly& b, const UniPoly& m);

}  // namespace frobgrow
