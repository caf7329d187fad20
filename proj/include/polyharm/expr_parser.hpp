#pragma once

#include <string_view>

#include "polyharm/poly1.hpp"
#include "polyharm/poly2.hpp"

namespace polyharm {

/// Parses a polynomial in i and j (x and y are accepted as aliases).
/// Grammar: integer literals, + - * / ^, parentheses; '/' only divides by a
/// nonzero constant and '^' takes a nonnegative integer exponent.
/// Example: "(i+1)*(j+1)*(2*i^2 + 15)/4".
Poly2 parse_poly2(std::string_view text);

/// Parses a univariate polynomial in t (x accepted as alias), same grammar.
Poly1 parse_poly1(std::string_view text);

}  // namespace polyharm
