#pragma once

#include <string_view>

#include "softnum/soft_number.hpp"

namespace softnum {

/// Evaluates a soft-number expression.
///
///     expr    := term (('+' | '-') term)*
///     term    := unary (('*' | '/') unary)*
///     unary   := ('+' | '-') unary | power
///     power   := primary ('^' ['+' | '-'] integer)?
///     primary := number ['z0'] | 'z0' | name '(' expr ')' | '(' expr ')'
///
/// `name` is one of exp, ln, sin, cos, tan, sqrt, recip. A negative integer
/// exponent divides one by the natural power. Syntax problems throw
/// ParseError; arithmetic and domain failures propagate from the algebra.
SoftNumber evaluate(std::string_view expression);

}  // namespace softnum
