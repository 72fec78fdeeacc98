#pragma once

#include <string_view>

#include "qhforge/algebra.hpp"

namespace qhforge::expr {

// Shared element grammar:
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := factor (['*'] factor)*      (juxtaposition multiplies)
//   factor := primary ['^' signed-rational]
//   primary:= rational | 'q' | 't' | generator | basis label | '(' expr ')'
// Rationals are <int>[/<int>]; q exponents are integers, t exponents
// rationals. Errors carry the source position.
algebra::AlgebraElement parse_element(const algebra::RingPtr& ring, std::string_view text);

// Scalar-only variant: same grammar without generators.
novikov::NovikovScalar parse_scalar(std::string_view text);

Rational parse_rational(std::string_view text);

}  // namespace qhforge::expr
