#pragma once

#include "corank/poly.hpp"

namespace corank {

struct parse_error : domain_error {
    parse_error(const std::string& what, std::size_t position)
        : domain_error(what + " (at position " + std::to_string(position) + ")"),
          position(position) {}
    std::size_t position;
};

/// Parse "2*x*y - y*x + 1" style input. Grammar:
///   expr   := ['-'] term (('+' | '-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ['^' nat]
///   atom   := variable | number | number '/' number | '(' expr ')'
/// Fractions are accepted over the rationals only. A term whose word is
/// empty needs unital = true.
Polynomial parse_poly(const Alphabet& alphabet, Ring ring, bool unital,
                      const std::string& text);

} // namespace corank
