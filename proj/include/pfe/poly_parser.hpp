#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "pfe/polynomial.hpp"

namespace pfe {

class PolyParseError : public std::runtime_error {
public:
    PolyParseError(const std::string& what, size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)),
          position_(position) {}
    size_t position() const { return position_; }

private:
    size_t position_;
};

// Polynomial expressions over x with exact rational literals:
//   expr   := term (('+'|'-') term)*
//   term   := unary ('*' unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' nonneg-integer)?
//   atom   := rational-literal | 'x' | '(' expr ')'
// A rational literal is digits or digits/digits ('/' is not an operator).
XPolynomial parse_poly(std::string_view text);

}  // namespace pfe
