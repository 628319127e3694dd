#include "gdsl/design/quantize.hpp"

#include <algorithm>
#include <cmath>

#include "gdsl/error.hpp"

namespace gdsl::design {

TokenDomain token_domain(const ParamSpec& spec) {
  switch (spec.kind) {
    case ParamKind::boolean: return {0, 1};
    case ParamKind::integer: return {static_cast<std::int64_t>(spec.min), static_cast<std::int64_t>(spec.max)};
    case ParamKind::real: return {0, kLambda};
    case ParamKind::select: return {0, static_cast<std::int64_t>(spec.options.size()) - 1};
  }
  return {0, 0};
}

std::int64_t quantize_value(const ParamSpec& spec, const Value& v) {
  if (!spec.admits(v)) throw ValidationFailed("value " + to_string(v) + " is not admissible for " + spec.path);
  switch (spec.kind) {
    case ParamKind::boolean: return std::get<bool>(v) ? 1 : 0;
    case ParamKind::integer: return std::get<std::int64_t>(v);
    case ParamKind::real: {
      const double norm = std::clamp((std::get<double>(v) - spec.min) / (spec.max - spec.min), 0.0, 1.0);
      return static_cast<std::int64_t>(std::floor(kLambda * norm + 0.5));
    }
    case ParamKind::select: return static_cast<std::int64_t>(*spec.option_index(std::get<std::string>(v)));
  }
  return 0;
}

Value dequantize_token(const ParamSpec& spec, std::int64_t token) {
  const TokenDomain d = token_domain(spec);
  if (token < d.lo || token > d.hi) {
    throw TokenDomainError("OUT_OF_DOMAIN", "token " + std::to_string(token) + " for " + spec.path + " is outside [" +
                                               std::to_string(d.lo) + ", " + std::to_string(d.hi) + "]");
  }
  switch (spec.kind) {
    case ParamKind::boolean: return token == 1;
    case ParamKind::integer: return token;
    case ParamKind::real:
      return spec.min + (static_cast<double>(token) / kLambda) * (spec.max - spec.min);
    case ParamKind::select: return spec.options[static_cast<std::size_t>(token)];
  }
  return false;
}

TokenSequence quantize(const DesignConfiguration& cfg, const DesignSchema& schema) {
  const auto violations = validate_config(cfg, schema);
  if (!violations.empty()) {
    throw ValidationFailed("configuration is invalid: " + std::string(to_string(violations.front().reason)) + " @ " +
                           violations.front().path + " (" + std::to_string(violations.size()) + " violations)");
  }
  TokenSequence out;
  out.tokens.reserve(schema.size());
  for (const ParamSpec& spec : schema.params()) out.tokens.push_back(quantize_value(spec, cfg.at(spec.path)));
  return out;
}

DesignConfiguration dequantize(const TokenSequence& tokens, const DesignSchema& schema) {
  if (tokens.tokens.size() != schema.size()) {
    throw TokenDomainError("WRONG_LENGTH", "expected " + std::to_string(schema.size()) + " tokens, got " +
                                               std::to_string(tokens.tokens.size()));
  }
  DesignConfiguration cfg;
  for (std::size_t i = 0; i < schema.size(); ++i) {
    const ParamSpec& spec = schema.params()[i];
    try {
      cfg.assignments[spec.path] = dequantize_token(spec, tokens.tokens[i]);
    } catch (const TokenDomainError& e) {
      throw TokenDomainError(e.code(), "token index " + std::to_string(i) + ": " + e.what());
    }
  }
  return cfg;
}

}  // namespace gdsl::design
