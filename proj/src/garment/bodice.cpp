#include <algorithm>

#include "builder.hpp"

namespace gdsl::garment {
namespace {

using namespace detail;

// One side of the bodice: the parameters bodice_left.* may override.
struct Half {
  double shoulder_x;
  double slope;
  double shoulder_curve;
  double armhole_depth;
  double side_curve;
};

struct Frame {
  double waist_len;
  double height;      // hem to shoulder line
  double neck_y;      // side neck point height
  double neck_half;   // half neck width
  double bust_half;   // quarter bust with ease
  double hem_half;
  Half sides[2];      // indexed by Side
};

Half read_half(const DesignConfiguration& cfg, const BodyMeasurements& b, Side side) {
  const std::string pre = side_prefix(cfg, "bodice", "bodice.asymmetric", side);
  return Half{b.shoulder_width / 2.0 * cfg.real(pre + "shoulder_width"), cfg.real(pre + "shoulder_slope"),
              cfg.real(pre + "shoulder_curve"), b.bust_circ / 8.0 + 10.0 + cfg.real(pre + "armhole_drop"),
              cfg.real(pre + "side_curve")};
}

Frame read_frame(const DesignConfiguration& cfg, const BodyMeasurements& b) {
  validate_body(b);
  Frame f{};
  f.waist_len = b.waist_length();
  f.height = cfg.real("bodice.length") * f.waist_len;
  if (f.height - f.waist_len >= b.waist_to_floor)
    throw DraftError("BODICE_TOO_LONG", "bodice hem would fall below the floor");
  f.neck_y = f.height + cfg.real("bodice.neck_raise");
  f.neck_half = b.neck_circ / 6.0 * cfg.real("neckline.width");
  f.bust_half = b.bust_circ / 4.0 * (1.0 + cfg.real("bodice.ease"));
  const double t = std::clamp((f.height - f.waist_len) / b.waist_to_hip, 0.0, 1.0);
  const double girth = b.waist_circ + (b.hip_circ - b.waist_circ) * t;
  f.hem_half = girth / 4.0 * (1.0 + cfg.real("bodice.waist_ease"));
  f.sides[0] = read_half(cfg, b, Side::right);
  f.sides[1] = read_half(cfg, b, Side::left);
  for (const Half& h : f.sides) {
    if (!(h.shoulder_x > f.neck_half + 0.5))
      throw DraftError("SHOULDER_TOO_NARROW", "shoulder point falls inside the neckline");
    if (!(f.height - h.armhole_depth > 1.0))
      throw DraftError("ARMHOLE_TOO_DEEP", "armhole reaches below the bodice hem");
  }
  return f;
}

// Armhole of the +x half from shoulder tip to underarm, with the shoulder
// line at y = 0.
Edge canonical_armhole(const Half& h, double bust_half) {
  const Vec2 tip{h.shoulder_x, -h.slope};
  const Vec2 under{bust_half, -h.armhole_depth};
  const double dv = h.armhole_depth - h.slope;
  return Edge::cubic(tip, {h.shoulder_x, tip.y - 0.45 * dv}, {std::max(h.shoulder_x, bust_half - 0.1 * dv), under.y},
                     under);
}

struct Neckline {
  std::vector<Edge> edges;  // (+w, 0) to (-w, 0)
  double depth;
};

Neckline canonical_neckline(const std::string& kind, double w, double depth, double bx, double by,
                            const DesignConfiguration& cfg) {
  const Vec2 r{w, 0.0};
  const Vec2 l{-w, 0.0};
  if (kind == "crew")
    return {{Edge::cubic(r, {w * bx, -depth * by}, {-w * bx, -depth * by}, l)}, 0.75 * depth * by};
  if (kind == "v") {
    const double bulge = cfg.real("neckline.v_curve");
    const Vec2 tip{0.0, -depth};
    return {{seam(r, tip, bulge, ""), seam(tip, l, bulge, "")}, depth * (1.0 + std::abs(bulge))};
  }
  if (kind == "boat") {
    const double ratio = cfg.real("neckline.boat_ratio");
    return {{Edge::quadratic(r, {0.0, -2.0 * depth * ratio}, l)}, depth * ratio};
  }
  const double corner = w * cfg.real("neckline.square_corner");
  return {{Edge::line(r, {corner, -depth}), Edge::line({corner, -depth}, {-corner, -depth}),
           Edge::line({-corner, -depth}, l)},
          depth};
}

Neckline front_neckline(const DesignConfiguration& cfg, double w) {
  return canonical_neckline(cfg.select("neckline.kind"), w, cfg.real("neckline.front_depth"),
                            cfg.real("neckline.front_bezier_x"), cfg.real("neckline.front_bezier_y"), cfg);
}

Neckline back_neckline(const DesignConfiguration& cfg, double w) {
  return canonical_neckline(cfg.select("neckline.back_kind"), w, cfg.real("neckline.back_depth"),
                            cfg.real("neckline.back_bezier_x"), cfg.real("neckline.back_bezier_y"), cfg);
}

// Side seam, armhole and shoulder of the +x half, travelling upwards.
std::vector<Edge> half_chain(const Frame& f, const Half& h, const std::string& side) {
  const Vec2 up{0.0, f.height};
  const Edge arm = geometry::translated(canonical_armhole(h, f.bust_half), up);
  Edge armhole = geometry::reversed(arm);
  armhole.label = "armhole_" + side;
  return {seam({f.hem_half, 0.0}, arm.end, h.side_curve, "side_" + side), armhole,
          seam(arm.start, {f.neck_half, f.neck_y}, -h.shoulder_curve, "shoulder_" + side)};
}

Panel draft_half_panel(const DesignConfiguration& cfg, const Frame& f, bool front) {
  // Seen from outside, the body's left is at +x on the front panel and at
  // -x on the back panel.
  const Side plus = front ? Side::left : Side::right;
  const Side minus = front ? Side::right : Side::left;
  const std::string plus_name(to_string(plus));
  const std::string minus_name(to_string(minus));

  const Neckline neck = front ? front_neckline(cfg, f.neck_half) : back_neckline(cfg, f.neck_half);
  if (!(f.neck_y - neck.depth > 1.0)) throw DraftError("NECKLINE_TOO_DEEP", "neckline reaches the bodice hem");

  const double hem_curve = cfg.real(front ? "bodice.front_hem_curve" : "bodice.back_hem_curve");
  const double sag = hem_curve * 2.0 * f.hem_half;
  const Edge hem = Edge::quadratic({-f.hem_half, 0.0}, {0.0, -2.0 * sag}, {f.hem_half, 0.0});
  auto [hem_minus, hem_plus] = geometry::split_edge(hem, 0.5);
  hem_minus.label = "hem_" + minus_name;
  hem_plus.label = "hem_" + plus_name;

  std::vector<Edge> loop{hem_plus};
  for (Edge& e : half_chain(f, f.sides[static_cast<int>(plus)], plus_name)) loop.push_back(std::move(e));
  for (std::size_t i = 0; i < neck.edges.size(); ++i) {
    Edge e = geometry::translated(neck.edges[i], {0.0, f.neck_y});
    e.label = "neckline_" + std::to_string(i);
    loop.push_back(std::move(e));
  }
  for (Edge& e : mirrored(half_chain(f, f.sides[static_cast<int>(minus)], minus_name))) loop.push_back(std::move(e));
  loop.push_back(hem_minus);

  const double slit = cfg.real("bodice.slit");
  if (slit >= kMinSlit) {
    split_labelled(loop, "side_" + plus_name, slit, false);
    split_labelled(loop, "side_" + minus_name, 1.0 - slit, true);
  }

  const double width = std::max(f.bust_half, f.hem_half);
  const double depth = cfg.real("bodice.placement_depth");
  const std::array<double, 3> at{front ? -width : width, 0.0, front ? depth : -depth};
  return make_panel("bodice", front ? "front" : "back", std::move(loop),
                    PanelPlacement::from_axis_angle(0.0, 1.0, 0.0, front ? 0.0 : 180.0, at));
}

}  // namespace

std::string_view to_string(Side s) { return s == Side::right ? "right" : "left"; }

Component draft_bodice(const DesignConfiguration& cfg, const BodyMeasurements& b) {
  const Frame f = read_frame(cfg, b);
  Component c;
  c.name = "bodice";
  c.kind = ProgramKind::bodice;
  c.panels.push_back(draft_half_panel(cfg, f, true));
  c.panels.push_back(draft_half_panel(cfg, f, false));
  const Panel& front = c.panels[0];
  const Panel& back = c.panels[1];
  for (const char* side : {"right", "left"}) {
    const std::string s(side);
    c.internal_stitches.push_back(stitch(ref(front, "side_" + s), ref(back, "side_" + s)));
    c.internal_stitches.push_back(stitch(ref(front, "shoulder_" + s), ref(back, "shoulder_" + s)));
    c.interfaces["armhole_" + s] = {ref(front, "armhole_" + s), ref(back, "armhole_" + s)};
  }
  auto& neck = c.interfaces["neckline"];
  for (const Panel* p : {&front, &back}) {
    for (std::size_t i = 0; i < p->edges.size(); ++i)
      if (p->edges[i].label.rfind("neckline_", 0) == 0) neck.push_back({p->id, i});
  }
  c.interfaces["hem"] = {ref(front, "hem_right"), ref(front, "hem_left"), ref(back, "hem_right"),
                         ref(back, "hem_left")};
  return c;
}

double armhole_length(const Component& bodice, Side side) {
  double total = 0.0;
  for (const EdgeRef& r : bodice.interface("armhole_" + std::string(to_string(side)))) {
    const Panel* p = bodice.find_panel(r.panel);
    total += geometry::curve_length(p->edges[r.edge]);
  }
  return total;
}

double armhole_length(const DesignConfiguration& cfg, const BodyMeasurements& b, Side side) {
  validate_body(b);
  const Half h = read_half(cfg, b, side);
  const double bust_half = b.bust_circ / 4.0 * (1.0 + cfg.real("bodice.ease"));
  // Front and back armholes share one construction.
  return 2.0 * geometry::curve_length(canonical_armhole(h, bust_half));
}

std::vector<double> neckline_lengths(const DesignConfiguration& cfg, const BodyMeasurements& b) {
  validate_body(b);
  const double w = b.neck_circ / 6.0 * cfg.real("neckline.width");
  std::vector<double> out;
  for (const Neckline& n : {front_neckline(cfg, w), back_neckline(cfg, w)})
    for (const Edge& e : n.edges) out.push_back(geometry::curve_length(e));
  return out;
}

}  // namespace gdsl::garment
