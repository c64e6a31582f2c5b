#ifndef JACRANK_EXPR_HPP
#define JACRANK_EXPR_HPP

#include <string>
#include <string_view>

#include "jacrank/intpoly.hpp"

namespace jacrank {

// Parses an integer polynomial in the single variable x:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' nonneg-integer)?
//   base   := 'x' | integer | '(' expr ')'
// Whitespace-insensitive; the Unicode minus sign is accepted as '-'.
// Errors carry the byte position of the offending token.
IntPoly parse_polynomial(std::string_view text);

// Canonical rendering, descending powers; parse_polynomial(render(f)) == f.
std::string render_polynomial(const IntPoly& f);

}  // namespace jacrank

#endif
