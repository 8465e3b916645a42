#ifndef STARQ_ALGEBRA_POLY_PARSER_HPP
#define STARQ_ALGEBRA_POLY_PARSER_HPP

#include <span>
#include <string>
#include <string_view>

#include <starq/algebra/poly.hpp>

namespace starq
{

// Parses a polynomial expression over the given coordinate names.
//
// Grammar:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*      division only by nonzero constants
//   factor := atom ['^' integer]
//   atom   := integer | name | 'i' | '(' expr ')'
//
// Throws parse_error with the offending position.
Poly parse_poly(std::string_view text, std::span<const std::string> names);

} // namespace starq

#endif
