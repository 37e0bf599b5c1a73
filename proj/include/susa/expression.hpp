#pragma once

#include <string_view>

#include "susa/exact.hpp"
#include "susa/sexagesimal.hpp"

namespace susa {

/// Evaluates infix sexagesimal arithmetic: + - * with parentheses, unary
/// minus and recip(x). Radix-free literals are placed at 60^exponent.
Sexagesimal evaluate_expression(std::string_view text, long exponent = 0);

/// Parses a surd literal such as "sqrt(6)/2", "1/2 - 3*sqrt(21)" or the
/// rendering produced by SurdValue::str(). Square roots must be of rationals
/// and divisors must be nonzero rationals.
SurdValue parse_surd(std::string_view text);

}  // namespace susa
