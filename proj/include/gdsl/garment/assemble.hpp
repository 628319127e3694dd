#pragma once

#include <random>
#include <string>
#include <vector>

#include "gdsl/design/schema.hpp"
#include "gdsl/garment/draft.hpp"
#include "gdsl/pattern/pattern.hpp"

namespace gdsl::garment {

// Interface length ratios accepted when joining components.
inline constexpr double kMinInterfaceRatio = pattern::kMinRuffle;
inline constexpr double kMaxInterfaceRatio = pattern::kMaxRuffle;

// Stitches produced by joining two component interfaces.
struct StitchGroup {
  std::string interface_a;  // "<component>.<interface>"
  std::string interface_b;
  std::vector<std::size_t> stitches;  // indices into Pattern::stitches
};

struct ProgramTrace {
  std::string component;
  ProgramKind kind;
  std::vector<std::string> panel_ids;
};

struct AssemblyTrace {
  std::vector<ProgramTrace> programs;  // one per drafted component, DFS order
  std::vector<StitchGroup> groups;
  std::vector<std::size_t> internal_stitches;  // indices of component-internal stitches
};

struct AssembledPattern {
  pattern::Pattern pattern;
  AssemblyTrace trace;
};

// False for topologies with a dangling interface or nothing to draft:
// sleeves or a collar without a bodice, or neither upper nor bottom garment.
bool topology_coherent(const DesignConfiguration& cfg);

// Compiles a configuration into a pattern. Throws ValidationFailed for an
// invalid configuration, AssemblyError (DANGLING_INTERFACE, EMPTY_GARMENT,
// INTERFACE_MISMATCH) and DraftError from the component programs.
pattern::Pattern assemble(const DesignConfiguration& cfg, const BodyMeasurements& b);
AssembledPattern assemble_traced(const DesignConfiguration& cfg, const BodyMeasurements& b);

// Uniform random configuration conditioned on topology_coherent.
DesignConfiguration random_coherent_config(const design::DesignSchema& schema, std::mt19937_64& rng);

}  // namespace gdsl::garment
