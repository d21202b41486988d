#pragma once

#include <string_view>

#include "frobgrow/multipoly.hpp"
#include "frobgrow/ringspec.hpp"

namespace frobgrow {

/// Parses and fully expands a polynomial expression.
///
///   expr   := term (('+' | '-') term)*
///   term   := unary ('*' unary)*
///   unary  := '-' unary | power
///   power  := atom ('^' integer)?
///   atom   := integer | identifier | '(' expr ')'
///
/// Whitespace is insignificant. Integer literals are reduced mod p. Errors are
/// ParseError with the 1-based column of the offending character.
MultiPoly parse_poly(std::string_view text, const PolyRingPtr& ring);
MultiPoly parse_poly(std::string_view text, const RingSpec& ring);

/// Parses an expression in the single variable `var` (default "t") over F_p.
UniPoly parse_uni(std::string_view text, PrimeModulus p, std::string_view var = "t");

}  // namespace frobgrow
