#pragma once

#include <string>

#include "cremona/poly.hpp"

namespace cremona {

// Grammar: terms joined by + / -; a term is an optional integer-or-rational
// coefficient and *-separated powers var^k (k >= 1, ^1 optional);
// parentheses group subexpressions and distribute. Whitespace ignored.
//
//   expr   := ['-'] product { ('+'|'-') product }
//   product:= factor { '*' factor }
//   factor := atom [ '^' nat ]
//   atom   := number | var | '(' expr ')'
//   number := digits [ '/' digits ]
//
// Throws ParseError with the offending position.
Poly parse_poly(const std::string& text, const RingPtr& ring);

} // namespace cremona
