#pragma once

// Drafting helpers shared by the component programs.

#include <initializer_list>
#include <string>
#include <vector>

#include "gdsl/error.hpp"
#include "gdsl/garment/component.hpp"
#include "gdsl/garment/draft.hpp"
#include "gdsl/geometry/curve.hpp"
#include "gdsl/geometry/edge.hpp"

namespace gdsl::garment::detail {

using geometry::Edge;
using geometry::Vec2;
using pattern::PanelPlacement;

// Line when `bulge` is zero, otherwise a quadratic pushed `bulge` chords to
// the left of the travel direction. In a counter-clockwise loop positive
// bulges point into the panel.
Edge seam(Vec2 a, Vec2 b, double bulge, std::string label);

// Index of the first edge labelled `label`; throws DraftError when absent.
std::size_t edge_index(const Panel& p, const std::string& label);
EdgeRef ref(const Panel& p, const std::string& label);

// Mirror image about x = 0 that keeps the loop counter-clockwise.
std::vector<Edge> mirrored(const std::vector<Edge>& loop);

// Splits the edge labelled `label` at parameter t. The piece nearer the
// edge start keeps the label when `keep_start`, the other one is relabelled
// `label + "_slit"`.
void split_labelled(std::vector<Edge>& loop, const std::string& label, double t, bool keep_start);

// Replaces the edge labelled `label` by `pieces` sub-edges at the given
// parameters (strictly increasing in (0, 1)); pieces are labelled label_0..n.
void split_many(std::vector<Edge>& loop, const std::string& label, std::initializer_list<double> ts);

Panel make_panel(const std::string& component, const std::string& name, std::vector<Edge> edges,
                 PanelPlacement placement);

Stitch stitch(EdgeRef a, EdgeRef b, double ruffle = 1.0);

double length(const Panel& p, const std::string& label);

// Parameter prefix for the mirrored half when the side-specific copy applies.
std::string side_prefix(const DesignConfiguration& cfg, const std::string& base, const std::string& flag, Side side);

// Slits shorter than this fraction of their seam are ignored.
inline constexpr double kMinSlit = 0.01;

}  // namespace gdsl::garment::detail
