#include "builder.hpp"

namespace gdsl::garment {

using namespace detail;

Component draft_waistband(const DesignConfiguration& cfg, const BodyMeasurements& b) {
  validate_body(b);
  const double bottom = b.waist_circ + cfg.real("waistband.ease");
  const double top = bottom * cfg.real("waistband.top_ratio");
  const double height = cfg.real("waistband.width");
  const double end_curve = cfg.real("waistband.end_curve");
  const Vec2 b0{-bottom / 2.0, 0.0};
  const Vec2 b1{bottom / 2.0, 0.0};
  const Vec2 t1{top / 2.0, height};
  const Vec2 t0{-top / 2.0, height};
  std::vector<Edge> loop{Edge::line(b0, b1, "bottom"), seam(b1, t1, -end_curve, "end_front"),
                         seam(t1, t0, -cfg.real("waistband.top_curve"), "top"), seam(t0, b0, -end_curve, "end_back")};
  split_many(loop, "bottom", {0.25, 0.5, 0.75});
  split_many(loop, "top", {0.25, 0.5, 0.75});

  Component c;
  c.name = "waistband";
  c.kind = ProgramKind::waistband;
  const std::array<double, 3> at{-bottom / 2.0, b.waist_to_floor, cfg.real("waistband.placement_depth")};
  c.panels.push_back(make_panel("waistband", "band", std::move(loop), PanelPlacement::from_axis_angle(0, 0, 1, 0, at)));
  const Panel& p = c.panels[0];
  c.internal_stitches.push_back(stitch(ref(p, "end_front"), ref(p, "end_back")));
  for (int i = 0; i < 4; ++i) {
    c.interfaces["bottom"].push_back(ref(p, "bottom_" + std::to_string(i)));
    c.interfaces["top"].push_back(ref(p, "top_" + std::to_string(i)));
  }
  return c;
}

}  // namespace gdsl::garment
