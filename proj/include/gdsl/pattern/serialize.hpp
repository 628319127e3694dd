#pragma once

#include <string>
#include <string_view>

#include "gdsl/pattern/pattern.hpp"

namespace gdsl::pattern {

inline constexpr const char* kPatternFormat = "gdsl-pattern";
inline constexpr int kPatternVersion = 1;

// JSON pattern document; field layout is described in docs/formats.md.
std::string serialize_pattern(const Pattern& p);

// Throws ParseError: SYNTAX (with line/column), MISSING_FIELD / WRONG_TYPE
// (with the field path), INVARIANT_VIOLATION for control-point counts that do
// not match the edge kind or non-unit placement quaternions.
Pattern deserialize_pattern(std::string_view text);

}  // namespace gdsl::pattern
