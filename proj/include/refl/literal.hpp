#pragma once

#include <string>
#include <string_view>

#include "refl/cyclo.hpp"

namespace refl {

/// Parses a scalar literal such as `z5^2 + 1/2` or `-(1 + z3)*z4`.
///
/// Atoms are integers, `zN` (a primitive N-th root of unity) and parenthesized
/// expressions; operators are `+ - * / ^` with the usual precedence. The
/// result lives in the smallest conductor containing every `zN` used.
CycloNum parse_scalar(std::string_view text);

/// Renders a value in the grammar accepted by parse_scalar, so that
/// parse_scalar(format_scalar(x)) == x.
std::string format_scalar(const CycloNum& x);

}  // namespace refl
