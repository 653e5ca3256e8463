#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "fodlab/polymap.hpp"

namespace fodlab {

// Expression grammar (whitespace insignificant):
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := '-' factor | power
//   power  := atom ('^' integer)?
//   atom   := integer ('/' integer)? | 'x' integer | '(' expr ')'
//   map    := '[' (expr (';' expr)*)? ']' ':' integer '->' integer
// Errors are ParseError carrying the byte offset.

Poly parse_poly(std::string_view text, std::size_t arity);
PolyMap parse_map(std::string_view text);
Rational parse_rational(std::string_view text);
/// Rows separated by ';', entries by ',', optionally bracketed: "[2, 0; 0, 1/2]".
std::vector<std::vector<Rational>> parse_matrix(std::string_view text);

}  // namespace fodlab
