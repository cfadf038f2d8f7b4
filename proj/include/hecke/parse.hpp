#pragma once

#include <string>

#include "hecke/coeff.hpp"
#include "hecke/laurent.hpp"

namespace hecke {

// Parses the textual polynomial grammar shared by all rendered output:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ['^' int]
//   atom   := rational | 'v' | 'X'<idx> | '(' expr ')'
// Rationals are "p" or "p/q"; for n = 1 the bare name "X" means X1.
// Negative powers are allowed on v, on variables, and on single-term
// subexpressions. Throws std::invalid_argument on malformed input.
LaurentPoly parse_poly(const std::string& text, int nvars);

// Same grammar restricted to the coefficient ring (no X allowed).
Coefficient parse_coeff(const std::string& text);

}  // namespace hecke
