// Recursive-descent parser for algebra expressions used by the CLI:
//   expr    := term (('+'|'-') term)*
//   term    := factor ('*' factor)*
//   factor  := atom ('^' integer)?
//   atom    := rational | generator | '(' expr ')' | '-' atom
//   generator := 'c' '[' i ',' j ']'     (1-based, 1 <= i,j <= n)
// Whitespace is ignored.  Errors carry the 0-based input position.
#pragma once

#include <optional>
#include <string>

#include "core/freealg.hpp"

namespace qba {

// Parses and normalizes in A(n) (or A(shape) when given).  Throws
// Error(ParseError) with "at position k" on malformed input and
// Error(IndexViolation) when a generator index is out of range.
AlgebraElement parse_expression(const std::string& text, int n,
                                const ParamSpec& params,
                                const std::optional<Shape>& shape = std::nullopt);

}  // namespace qba
