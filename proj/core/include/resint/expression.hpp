#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "resint/integer.hpp"

namespace resint {

/// One signed monomial of a parsed sum, e.g. `-18*x^2*y` gives
/// coefficient -18 and factors {("x", 2), ("y", 1)}.
struct ParsedTerm {
  Integer coefficient;
  std::vector<std::pair<std::string, unsigned>> factors;
};

/// Parses a sum of signed monomials:
///
///   expr   := ['+' | '-'] term (('+' | '-') term)*
///   term   := factor ('*' factor)*
///   factor := INTEGER | NAME ['^' INTEGER]
///
/// NAME is [A-Za-z_][A-Za-z0-9_()]*. Whitespace is ignored. Errors are
/// ParseError with the 1-based column of the offending character and the
/// supplied line number.
std::vector<ParsedTerm> parse_expression(std::string_view text, std::size_t line = 0);

}  // namespace resint
