#pragma once

#include <random>

#include "gdsl/design/config.hpp"
#include "gdsl/design/schema.hpp"

namespace gdsl::design {

// Uniform draw from each parameter's domain independently: fair coin for
// booleans, uniform integer/option index, uniform real in [min, max].
// The result always passes validate_config.
DesignConfiguration random_config(const DesignSchema& schema, std::mt19937_64& rng);

}  // namespace gdsl::design
