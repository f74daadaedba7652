#pragma once

#include <string>
#include <string_view>

#include "vircurv/trig_field.hpp"

namespace vircurv {

/// Reads a linear combination of basis primitives:
///
///     expr      := [sign] term (sign term)*
///     term      := scalar "*" primitive | primitive | scalar
///     primitive := ("cos" | "sin") "(" [digits] "t" ")"
///     scalar    := digits ["/" digits]
///
/// Whitespace between tokens is ignored, "t" means "1t", and repeated modes
/// add up. Any failure raises ParseError carrying the 0-based offset and what
/// was expected there (zero denominators included).
TrigField parse_field(std::string_view text);

/// Canonical text: modes ascending, cos before sin, unit coefficients
/// omitted. parse_field(format_field(x)) == x.
std::string format_field(const TrigField& x);

} // namespace vircurv
