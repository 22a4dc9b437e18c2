#pragma once

#include <string_view>

#include "dgcm/polynomial.hpp"

namespace dgcm {

/// Parses `x*y^2 - 3*z` style input: identifiers, integer literals, `+ - * ^`
/// and parentheses.  Coefficients are reduced modulo the ring characteristic.
/// Throws ParseError with a 1-based line/column.
Poly parse_polynomial(std::string_view text, const Ring& ring);

}  // namespace dgcm
