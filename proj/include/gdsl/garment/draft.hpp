#pragma once

#include "gdsl/design/config.hpp"
#include "gdsl/garment/body.hpp"
#include "gdsl/garment/component.hpp"

namespace gdsl::garment {

using design::DesignConfiguration;

// Which half of the body a mirrored part belongs to.
enum class Side { right, left };

std::string_view to_string(Side s);

// Sleeve cap length target: (1 + kCapEase) * armhole length, met to within
// kCapTolerance by bisection on the cap height.
inline constexpr double kCapEase = 0.04;
inline constexpr double kCapTolerance = 0.05;
inline constexpr int kCapMaxIterations = 60;

// Front and back panels. Interfaces: "armhole_right", "armhole_left" (front
// edge, back edge), "neckline" (front edges then back edges), "hem" (front
// right, front left, back right, back left).
Component draft_bodice(const DesignConfiguration& cfg, const BodyMeasurements& b);

// Length of one armhole (front + back edge) of a drafted bodice.
double armhole_length(const Component& bodice, Side side);
// The same length computed from the parameters alone, in coordinates that
// do not depend on the bodice length. Sleeves are sized from this value so
// their panels stay bit-identical when unrelated bodice parameters change.
double armhole_length(const DesignConfiguration& cfg, const BodyMeasurements& b, Side side);

// Lengths of the neckline interface edges, computed like armhole_length.
std::vector<double> neckline_lengths(const DesignConfiguration& cfg, const BodyMeasurements& b);

// One sleeve panel with a two-quadratic cap. Interfaces: "cap" (front, back),
// "wrist" (hem). Carries a cuff child when cuff.enabled.
Component draft_sleeve(const DesignConfiguration& cfg, const BodyMeasurements& b, double armhole_len,
                       Side side = Side::right);

// Sum of the two cap edge lengths of a drafted sleeve.
double cap_length(const Component& sleeve);

// Tube cuff sized for a sleeve hem of `hem_len` cm. Interface "wrist" (top).
Component draft_cuff(const DesignConfiguration& cfg, const BodyMeasurements& b, double hem_len, Side side,
                     const std::string& name);

// Band sewn to the neckline. `neckline_lengths` are the lengths of the
// neckline interface edges in order; the collar bottom is split to match.
// Interface "neckline". collar.kind == none yields an empty component.
Component draft_collar(const DesignConfiguration& cfg, const BodyMeasurements& b,
                       const std::vector<double>& neckline_lengths);

// Interfaces of the three bottoms: "waist" (front right, front left, back
// right, back left). Skirts and pants also expose "hem", where the optional
// flounce or turnup child attaches through its own "hem" interface.
Component draft_skirt(const DesignConfiguration& cfg, const BodyMeasurements& b);
Component draft_layered_skirt(const DesignConfiguration& cfg, const BodyMeasurements& b);
Component draft_pants(const DesignConfiguration& cfg, const BodyMeasurements& b);

// (waist + ease) x width band. Interfaces "top" and "bottom", 4 edges each.
Component draft_waistband(const DesignConfiguration& cfg, const BodyMeasurements& b);

}  // namespace gdsl::garment
