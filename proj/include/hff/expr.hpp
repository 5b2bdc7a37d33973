#pragma once

#include <string>

#include "hff/bivar.hpp"

namespace hff {

/// Parse the polynomial-expression format used by configs:
/// integer/rational literals ("3", "1/2"), variables t, x, y, operators
/// + - * ^ and parentheses. '/' only appears inside rational literals.
/// Throws Error(Errc::Parse) with the byte offset on malformed input.
BivarPoly parse_poly(const std::string& text);

/// Same, restricted to expressions without x and y (coefficients, marked
/// point coordinates).
RatFunc parse_scalar(const std::string& text);

}  // namespace hff
