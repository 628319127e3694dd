#pragma once

#include <string>

#include "gdsl/pattern/pattern.hpp"

namespace gdsl::pattern {

// SVG 1.1 rendering of the flat panels in a row-major grid (5 cm gutters,
// 1 user unit = 1 mm). Each panel is one <path>; each stitched edge pair is
// overlaid as <polyline> elements sharing one stroke colour. Output is
// byte-identical for identical input.
//
// Throws ValidationFailed when validate_pattern rejects the pattern.
std::string export_svg(const Pattern& p);

}  // namespace gdsl::pattern
