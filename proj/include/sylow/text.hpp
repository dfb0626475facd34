#pragma once

#include <string>
#include <string_view>

#include "sylow/poly.hpp"

// Text grammar for polynomials:
//   poly     := term ('+' term)*
//   term     := '0' | '1' | var ('*' var)*
//   var      := 'x' digits          (1-based variable index)
// Rendering joins terms with '+', lists a monomial's variables ascending,
// writes the constant term as '1' and the zero polynomial as '0'.  Terms are
// ordered by decreasing monomial mask.  Parsing accepts the same grammar and
// ignores whitespace; repeated terms cancel in characteristic 2.

namespace sylow {

std::string to_string(Monomial m);
std::string to_string(const BoolPoly& p);

// Throws ParseError (with the given line number, when nonzero) on malformed
// input or a variable index above the arity.
BoolPoly parse_poly(std::string_view text, unsigned arity,
                    std::size_t line = 0);

}  // namespace sylow
