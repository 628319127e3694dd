#include <algorithm>
#include <cmath>

#include "builder.hpp"

namespace gdsl::garment {
namespace {

using namespace detail;

// Trapezoid of bottom width `bottom`, top width `top` and height `height`,
// centred on x = 0: bottom, side_plus, top, side_minus.
std::vector<Edge> trapezoid(double bottom, double top, double height, double hem_bulge, const std::string& plus,
                            const std::string& minus) {
  const Vec2 b0{-bottom / 2.0, 0.0};
  const Vec2 b1{bottom / 2.0, 0.0};
  const Vec2 t1{top / 2.0, height};
  const Vec2 t0{-top / 2.0, height};
  return {seam(b0, b1, hem_bulge, "bottom"), Edge::line(b1, t1, "side_" + plus), Edge::line(t1, t0, "top"),
          Edge::line(t0, b0, "side_" + minus)};
}

const char* plus_side(bool front) { return front ? "left" : "right"; }
const char* minus_side(bool front) { return front ? "right" : "left"; }

PanelPlacement half_placement(bool front, double width, double y, double depth) {
  const std::array<double, 3> at{front ? -width / 2.0 : width / 2.0, y, front ? depth : -depth};
  return PanelPlacement::from_axis_angle(0.0, 1.0, 0.0, front ? 0.0 : 180.0, at);
}

void stitch_sides(Component& c, const Panel& front, const Panel& back) {
  for (const char* side : {"right", "left"}) {
    const std::string label = std::string("side_") + side;
    c.internal_stitches.push_back(stitch(ref(front, label), ref(back, label)));
  }
}

Component draft_flounce(const DesignConfiguration& cfg, const BodyMeasurements& b, const Component& skirt) {
  Component c;
  c.name = "skirt_flounce";
  c.kind = ProgramKind::skirt;
  const double ruffle = cfg.real("skirt.flounce_ruffle");
  const double height = cfg.real("skirt.flounce_length");
  for (bool front : {true, false}) {
    const Panel& parent = skirt.panels[front ? 0 : 1];
    const double top = ruffle * length(parent, "hem");
    const double bottom = top * (1.0 + cfg.real("skirt.flounce_flare"));
    auto loop = trapezoid(bottom, top, height, -cfg.real("skirt.flounce_hem_curve"), plus_side(front),
                          minus_side(front));
    c.panels.push_back(make_panel(c.name, front ? "front" : "back", std::move(loop),
                                  half_placement(front, bottom, b.waist_to_floor * 0.05,
                                                 cfg.real("skirt.placement_depth") + 2.0)));
  }
  stitch_sides(c, c.panels[0], c.panels[1]);
  c.interfaces["hem"] = {ref(c.panels[0], "top"), ref(c.panels[1], "top")};
  return c;
}

}  // namespace

Component draft_skirt(const DesignConfiguration& cfg, const BodyMeasurements& b) {
  validate_body(b);
  const double rise = cfg.real("skirt.rise");
  const double len = cfg.real("skirt.length") * b.waist_to_floor + rise;
  if (!(len > 5.0)) throw DraftError("SKIRT_TOO_SHORT", "skirt length must exceed 5 cm");
  if (len - rise > b.waist_to_floor) throw DraftError("SKIRT_TOO_LONG", "skirt hem would fall below the floor");
  const double waist = b.waist_circ / 2.0 * (1.0 + cfg.real("skirt.waist_ease"));
  const double hip = b.hip_circ / 2.0 * (1.0 + cfg.real("skirt.hip_ease"));
  const double hem = hip * (1.0 + cfg.real("skirt.flare"));
  const double hip_depth = std::clamp(b.waist_to_hip * cfg.real("skirt.hip_depth") + rise, 0.1 * len, 0.8 * len);
  const double hip_shape = cfg.real("skirt.hip_shape");
  const double slit = cfg.real("skirt.slit");

  // Side seam of the +x half from waist to hem.
  const Edge side = Edge::cubic({waist / 2.0, len}, {hip / 2.0, len - hip_shape * hip_depth},
                                {hip / 2.0, len - hip_depth}, {hem / 2.0, 0.0});
  const double sag = cfg.real("skirt.waist_curve") * waist;
  const Edge waist_edge = Edge::quadratic({waist / 2.0, len}, {0.0, len - 2.0 * sag}, {-waist / 2.0, len});

  Component c;
  c.name = "skirt";
  c.kind = ProgramKind::skirt;
  for (bool front : {true, false}) {
    const std::string plus = plus_side(front);
    const std::string minus = minus_side(front);
    Edge up = geometry::reversed(side);
    up.label = "side_" + plus;
    auto [w_plus, w_minus] = geometry::split_edge(waist_edge, 0.5);
    w_plus.label = "waist_" + plus;
    w_minus.label = "waist_" + minus;
    std::vector<Edge> half{up};
    Edge down = mirrored(half)[0];
    down.label = "side_" + minus;
    const double hem_curve = cfg.real(front ? "skirt.front_hem_curve" : "skirt.back_hem_curve");
    std::vector<Edge> loop{seam({-hem / 2.0, 0.0}, {hem / 2.0, 0.0}, -hem_curve, "hem"), up, w_plus, w_minus, down};
    if (slit >= kMinSlit) {
      split_labelled(loop, "side_" + plus, slit, false);
      split_labelled(loop, "side_" + minus, 1.0 - slit, true);
    }
    c.panels.push_back(make_panel("skirt", front ? "front" : "back", std::move(loop),
                                  half_placement(front, hem, b.waist_to_floor - len + rise,
                                                 cfg.real("skirt.placement_depth"))));
  }
  const Panel& front = c.panels[0];
  const Panel& back = c.panels[1];
  stitch_sides(c, front, back);
  c.interfaces["waist"] = {ref(front, "waist_right"), ref(front, "waist_left"), ref(back, "waist_right"),
                           ref(back, "waist_left")};
  c.interfaces["hem"] = {ref(front, "hem"), ref(back, "hem")};
  if (cfg.boolean("skirt.flounce")) c.children.push_back(draft_flounce(cfg, b, c));
  return c;
}

Component draft_layered_skirt(const DesignConfiguration& cfg, const BodyMeasurements& b) {
  validate_body(b);
  const std::int64_t n = cfg.integer("layered_skirt.n_layers");
  if (n < 1 || n > 10) throw DraftError("INVALID_LAYERS", "layer count must lie in [1, 10], got " + std::to_string(n));
  const double ruffle = cfg.real("layered_skirt.ruffle");
  const double diff = cfg.real("layered_skirt.level_diff");
  const double total = cfg.real("layered_skirt.length") * b.waist_to_floor;
  if (total > b.waist_to_floor) throw DraftError("SKIRT_TOO_LONG", "layers would reach below the floor");
  // Layer k is (1 + k * level_diff) times as tall as layer 0.
  const double nn = static_cast<double>(n);
  const double base = total / (nn + diff * nn * (nn - 1.0) / 2.0);
  const double attach = b.waist_circ / 2.0 * (1.0 + cfg.real("layered_skirt.waist_ease"));
  const double depth = cfg.real("layered_skirt.placement_depth");
  const double spacing = cfg.real("layered_skirt.layer_spacing");

  Component c;
  c.name = "layered_skirt";
  c.kind = ProgramKind::layered_skirt;
  double width = attach;
  double bottom_y = b.waist_to_floor;
  for (std::int64_t k = 0; k < n; ++k) {
    width *= ruffle;
    const double height = base * (1.0 + static_cast<double>(k) * diff);
    if (!(height > 0.5)) throw DraftError("INVALID_LAYERS", "layer " + std::to_string(k) + " has no height");
    bottom_y -= height;
    for (bool front : {true, false}) {
      const std::string plus = plus_side(front);
      const std::string minus = minus_side(front);
      auto loop = trapezoid(width, width, height, 0.0, plus, minus);
      if (k == 0) {
        split_labelled(loop, "top", 0.5, true);
        loop[2].label = "waist_" + plus;
        loop[3].label = "waist_" + minus;
      }
      c.panels.push_back(make_panel(c.name, "layer" + std::to_string(k) + (front ? "_front" : "_back"),
                                    std::move(loop),
                                    half_placement(front, width, bottom_y, depth + spacing * static_cast<double>(k))));
    }
    const Panel& front = c.panels[c.panels.size() - 2];
    const Panel& back = c.panels.back();
    stitch_sides(c, front, back);
    if (k > 0) {
      const Panel& above_front = c.panels[c.panels.size() - 4];
      const Panel& above_back = c.panels[c.panels.size() - 3];
      c.internal_stitches.push_back(stitch(ref(front, "top"), ref(above_front, "bottom"), ruffle));
      c.internal_stitches.push_back(stitch(ref(back, "top"), ref(above_back, "bottom"), ruffle));
    }
  }
  const Panel& front = c.panels[0];
  const Panel& back = c.panels[1];
  c.interfaces["waist"] = {ref(front, "waist_right"), ref(front, "waist_left"), ref(back, "waist_right"),
                           ref(back, "waist_left")};
  return c;
}

}  // namespace gdsl::garment
