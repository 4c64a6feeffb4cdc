#pragma once

#include <string>
#include <string_view>

#include "reflectk/scalar.hpp"

namespace reflectk {

/// Parses the textual scalar grammar: integers, registry names, + - * / ^
/// with integer exponents, parentheses; `q` is sugar for -s^2.
/// Throws ParseError carrying the 1-based character offset.
Scalar parse_scalar(std::string_view text);

/// Canonical printing: descending graded-lex term order, explicit `*`,
/// `(num)/(den)` when the denominator is not 1. parse(print(x)) == x.
std::string to_string(const Scalar& x);
std::string to_string(const Poly& p);

}  // namespace reflectk
