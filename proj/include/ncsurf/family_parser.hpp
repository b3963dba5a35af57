#pragma once

#include <string_view>

#include "ncsurf/monideal.hpp"

namespace ncsurf {

// Parses the graded-family DSL:
//
//   family   := template (',' template)*
//   template := factor ('*' factor)* | '1'
//   factor   := var ('^' affexp)?
//   affexp   := int | 'm' | int '*' 'm' | int '*' 'm' ('+'|'-') int
//             | 'm' ('+'|'-') int | '(' affexp ')'
//
// Variables are ordered by first appearance. The family is validated on
// weights [1, validate_up_to]. Throws ParseError (with position) and
// NegativeExponent.
GradedMonomialFamily parse_family(std::string_view src, int validate_up_to = 1);

}  // namespace ncsurf
