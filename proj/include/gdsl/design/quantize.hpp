#pragma once

#include <cstdint>
#include <vector>

#include "gdsl/design/config.hpp"
#include "gdsl/design/schema.hpp"

namespace gdsl::design {

inline constexpr int kLambda = 100;

struct TokenSequence {
  std::vector<std::int64_t> tokens;
  friend bool operator==(const TokenSequence&, const TokenSequence&) = default;
};

struct TokenDomain {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

// boolean [0,1]; integer [min,max]; float [0,lambda]; select [0, options-1].
TokenDomain token_domain(const ParamSpec& spec);

std::int64_t quantize_value(const ParamSpec& spec, const Value& v);
Value dequantize_token(const ParamSpec& spec, std::int64_t token);

// One token per schema parameter, in schema order. Floats use
// round-half-up(lambda * clamp((d - min) / (max - min), 0, 1)).
// Throws ValidationFailed when validate_config reports anything.
TokenSequence quantize(const DesignConfiguration& cfg, const DesignSchema& schema);

// Throws TokenDomainError (code WRONG_LENGTH or OUT_OF_DOMAIN, message naming
// the token index) on malformed input.
DesignConfiguration dequantize(const TokenSequence& tokens, const DesignSchema& schema);

}  // namespace gdsl::design
