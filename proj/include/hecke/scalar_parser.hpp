#pragma once

#include <string_view>

#include "hecke/rational_function.hpp"

namespace hecke {

/// Parses the scalar text grammar produced by `to_string`:
///
///     expr   := term (('+' | '-') term)*
///     term   := unary (('*' | '/') unary)*
///     unary  := ('-' | '+') unary | power
///     power  := atom ('^' ['-'] integer)?
///     atom   := integer | variable | '(' expr ')'
///
/// Variables are q1, q2, q and s. Throws ParseError with the offending offset.
RationalFunction parse_scalar(std::string_view text);

}  // namespace hecke
