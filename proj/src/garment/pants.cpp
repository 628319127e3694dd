#include "builder.hpp"

namespace gdsl::garment {
namespace {

using namespace detail;

// Quarters in interface order.
struct Quarter {
  bool front;
  Side leg;
  std::string name() const { return std::string(front ? "front_" : "back_") + std::string(to_string(leg)); }
};

constexpr Quarter kQuarters[] = {{true, Side::right}, {true, Side::left}, {false, Side::right}, {false, Side::left}};

// Local frame: x grows from the outseam towards the centre seam. Left-leg
// front quarters and right-leg back quarters are mirrored so that the
// centre seam faces the body's midline once placed.
bool mirrored_quarter(const Quarter& q) { return q.front == (q.leg == Side::left); }

std::vector<Edge> quarter_loop(const DesignConfiguration& cfg, const BodyMeasurements& b, bool front) {
  const double ease = 1.0 + cfg.real("pants.ease");
  const double waist_q = b.waist_circ / 4.0 * ease;
  const double hip_q = b.hip_circ / 4.0 * ease;
  const double rise = b.rise_depth * cfg.real("pants.rise");
  const double len = cfg.real("pants.length") * b.waist_to_floor;
  const double crotch_y = len - rise;
  if (!(crotch_y > 1.0)) throw DraftError("PANTS_TOO_SHORT", "pants length does not clear the crotch depth");
  const double ext_front = b.hip_circ / 16.0;
  const double thigh = hip_q + ext_front;
  const double hem_w = thigh * (0.6 + cfg.real("pants.width")) * (1.0 + cfg.real("pants.flare"));
  const double hem_off = thigh / 2.0 - hem_w / 2.0;
  // Back quarters push the inner points out by back_extension, which keeps
  // the inseam and outseam lengths equal to the front ones.
  const double shift = front ? 0.0 : cfg.real("pants.back_extension");
  const double ext = ext_front + shift;
  const double shape = cfg.real("pants.crotch_shape");

  const Vec2 waist_out{hip_q - waist_q, len};
  const Vec2 waist_centre{hip_q, len};
  const Vec2 crotch{hip_q + ext, crotch_y};
  const Vec2 hem_out{hem_off, 0.0};
  const Vec2 hem_in{hem_off + hem_w + shift, 0.0};

  std::vector<Edge> loop{
      seam(hem_out, hem_in, -cfg.real("pants.hem_curve"), "hem"),
      seam(hem_in, crotch, cfg.real("pants.inseam_curve"), "inseam"),
      Edge::cubic(crotch, {hip_q + ext * (1.0 - shape), crotch_y}, {hip_q, crotch_y + rise * (1.0 - shape)},
                  waist_centre, "crotch"),
      seam(waist_centre, waist_out, cfg.real("pants.waist_curve"), "waist"),
      Edge::cubic(waist_out, {0.0, len - b.waist_to_hip * cfg.real("pants.hip_shape")}, {0.5 * hem_off, 0.5 * crotch_y},
                  hem_out, "outseam")};
  const double slit = cfg.real("pants.slit");
  if (slit >= kMinSlit) split_labelled(loop, "outseam", 1.0 - slit, true);
  return loop;
}

Component draft_turnup(const DesignConfiguration& cfg, const Component& pants) {
  Component c;
  c.name = "pants_turnup";
  c.kind = ProgramKind::pants;
  const double height = cfg.real("pants.turnup_height");
  const double flare = cfg.real("pants.turnup_flare") * height;
  for (std::size_t i = 0; i < 4; ++i) {
    const double top = length(pants.panels[i], "hem");
    const Vec2 b0{-top / 2.0 - flare, 0.0};
    const Vec2 b1{top / 2.0 + flare, 0.0};
    const Vec2 t1{top / 2.0, height};
    const Vec2 t0{-top / 2.0, height};
    std::vector<Edge> loop{Edge::line(b0, b1, "bottom"), Edge::line(b1, t1, "end_in"), Edge::line(t1, t0, "top"),
                           Edge::line(t0, b0, "end_out")};
    const Quarter& q = kQuarters[i];
    if (mirrored_quarter(q)) loop = mirrored(loop);
    const std::array<double, 3> at{0.0, 0.0, q.front ? 1.0 : -1.0};
    c.panels.push_back(make_panel(c.name, q.name(), std::move(loop),
                                  PanelPlacement::from_axis_angle(0, 1, 0, q.front ? 0.0 : 180.0, at)));
  }
  for (std::size_t leg = 0; leg < 2; ++leg) {
    const Panel& f = c.panels[leg];
    const Panel& bk = c.panels[leg + 2];
    c.internal_stitches.push_back(stitch(ref(f, "end_in"), ref(bk, "end_in")));
    c.internal_stitches.push_back(stitch(ref(f, "end_out"), ref(bk, "end_out")));
  }
  auto& hem = c.interfaces["hem"];
  for (const Panel& p : c.panels) hem.push_back(ref(p, "top"));
  return c;
}

}  // namespace

Component draft_pants(const DesignConfiguration& cfg, const BodyMeasurements& b) {
  validate_body(b);
  Component c;
  c.name = "pants";
  c.kind = ProgramKind::pants;
  const std::vector<Edge> front = quarter_loop(cfg, b, true);
  const std::vector<Edge> back = quarter_loop(cfg, b, false);
  const double spread = cfg.real("pants.placement_spread");
  const double len = cfg.real("pants.length") * b.waist_to_floor;
  for (const Quarter& q : kQuarters) {
    std::vector<Edge> loop = q.front ? front : back;
    if (mirrored_quarter(q)) loop = mirrored(loop);
    const double x = q.leg == Side::right ? -spread : spread;
    const std::array<double, 3> at{x, b.waist_to_floor - len, q.front ? 10.0 : -10.0};
    c.panels.push_back(make_panel("pants", q.name(), std::move(loop),
                                  PanelPlacement::from_axis_angle(0, 1, 0, q.front ? 0.0 : 180.0, at)));
  }
  for (std::size_t leg = 0; leg < 2; ++leg) {
    const Panel& f = c.panels[leg];
    const Panel& bk = c.panels[leg + 2];
    c.internal_stitches.push_back(stitch(ref(f, "outseam"), ref(bk, "outseam")));
    c.internal_stitches.push_back(stitch(ref(f, "inseam"), ref(bk, "inseam")));
  }
  c.internal_stitches.push_back(stitch(ref(c.panels[0], "crotch"), ref(c.panels[1], "crotch")));
  c.internal_stitches.push_back(stitch(ref(c.panels[2], "crotch"), ref(c.panels[3], "crotch")));
  auto& waist = c.interfaces["waist"];
  auto& hem = c.interfaces["hem"];
  for (const Panel& p : c.panels) {
    waist.push_back(ref(p, "waist"));
    hem.push_back(ref(p, "hem"));
  }
  if (cfg.boolean("pants.turnup")) c.children.push_back(draft_turnup(cfg, c));
  return c;
}

}  // namespace gdsl::garment
