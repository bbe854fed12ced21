#pragma once

#include <string_view>

#include "logbehave/poly.hpp"

namespace logbehave {

// Parses bound expressions in n: integer literals, n, + - * /, ^ with an
// integer exponent, parentheses. Anything else raises ParseError.
//   "16*(n-1)/n", "16*(n^3-n^2+1)/(n^3-n^2)", "159/10"
RatFunc parse_bound(std::string_view text);

}  // namespace logbehave
