#pragma once

#include <string_view>

#include "reptile/algebra/algebraic_real.hpp"

namespace reptile {

/// Exact value of an expression such as "sqrt(2)/2", "(1 + sqrt(5))/4", "phi - 1", "-1/3" or "0.25".
/// Grammar: sums and differences of products and quotients of numbers, sqrt(...), phi, parenthesized
/// expressions and integer powers (^). Throws InputError with the 1-based column on malformed input,
/// DomainError for sqrt of a negative value or division by zero.
AlgebraicReal parse_radical(std::string_view text);

}  // namespace reptile
