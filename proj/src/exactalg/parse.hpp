#pragma once

#include <string>
#include <string_view>

#include "exactalg/ratfun.hpp"

namespace rzlab {

// Integer or "p/q"; surrounding whitespace ignored. `offset` shifts the
// position reported in ParseError.
BigRational parse_rational(std::string_view text, std::size_t offset = 0);

// Comma-separated ascending coefficients: "2,8,-16" is -16z^2 + 8z + 2.
ExactPoly parse_coefficients(std::string_view text, std::size_t offset = 0);

// "num ; den" in coefficient form; a bare list means den = 1.
ExactRatFun parse_ratfun_coefficients(std::string_view text, std::size_t offset = 0);

// Expression over one variable (z, or t for tan-family outer functions)
// with integers, + - * / ^, parentheses and unary minus. Exponents are
// integer literals, optionally negative.
ExactRatFun parse_expression(std::string_view text, std::size_t offset = 0);

// Coefficient form when the text contains ',' or ';', expression otherwise.
ExactRatFun parse_function(std::string_view text);

}  // namespace rzlab
