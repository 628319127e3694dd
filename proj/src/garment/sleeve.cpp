#include <algorithm>
#include <cmath>

#include "builder.hpp"

namespace gdsl::garment {
namespace {

using namespace detail;

// Cap of width `w` and height `h`: two quadratics meeting at the crown.
std::pair<Edge, Edge> cap_edges(double w, double h, double shape_front, double shape_back) {
  const Vec2 front{w / 2.0, 0.0};
  const Vec2 crown{0.0, h};
  const Vec2 back{-w / 2.0, 0.0};
  return {Edge::quadratic(front, {w / 2.0 * shape_front, h}, crown, "cap_front"),
          Edge::quadratic(crown, {-w / 2.0 * shape_back, h}, back, "cap_back")};
}

double cap_len(double w, double h, double sf, double sb) {
  const auto [f, b] = cap_edges(w, h, sf, sb);
  return geometry::curve_length(f) + geometry::curve_length(b);
}

// Cap height whose cap length meets the target within tolerance.
double solve_cap_height(double w, double armhole_len, double sf, double sb) {
  const double target = (1.0 + kCapEase) * armhole_len;
  if (!(w < target))
    throw DraftError("CAP_UNSOLVABLE", "cap width " + std::to_string(w) + " cm already exceeds the target cap length");
  double lo = 0.0;
  double hi = armhole_len;
  if (cap_len(w, hi, sf, sb) < target)
    throw DraftError("CAP_UNSOLVABLE", "no cap height below the armhole length reaches the target");
  double best = hi;
  double best_err = std::abs(cap_len(w, hi, sf, sb) - target);
  for (int i = 0; i < kCapMaxIterations; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double err = cap_len(w, mid, sf, sb) - target;
    if (std::abs(err) < best_err) {
      best = mid;
      best_err = std::abs(err);
    }
    if (best_err <= kCapTolerance * 1e-3) break;
    (err < 0.0 ? lo : hi) = mid;
  }
  if (best_err > kCapTolerance)
    throw DraftError("CAP_UNSOLVABLE", "cap bisection did not converge within " +
                                           std::to_string(kCapMaxIterations) + " iterations");
  return best;
}

}  // namespace

Component draft_sleeve(const DesignConfiguration& cfg, const BodyMeasurements& b, double armhole_len, Side side) {
  validate_body(b);
  if (!(armhole_len > 0.0)) throw DraftError("INVALID_ARMHOLE", "armhole length must be positive");
  const std::string pre = side_prefix(cfg, "sleeve", "sleeve.asymmetric", side);
  const std::string name = "sleeve_" + std::string(to_string(side));
  const double w = cfg.real(pre + "cap_width") * armhole_len;
  const double sf = cfg.real(pre + "cap_shape_front");
  const double sb = cfg.real(pre + "cap_shape_back");
  const double h = solve_cap_height(w, armhole_len, sf, sb);

  // Underarm length below the cap base.
  const double len_ratio = cfg.real(pre + "length");
  const double len = len_ratio * b.arm_length;
  const double hem_w =
      std::max(w * (1.0 - cfg.real(pre + "taper") * len_ratio), 1.05 * b.wrist_circ) * (1.0 + cfg.real(pre + "flare"));
  const double underarm = cfg.real(pre + "underarm_curve");
  const Vec2 hem_back{-hem_w / 2.0, -len};
  const Vec2 hem_front{hem_w / 2.0, -len};
  auto [cap_front, cap_back] = cap_edges(w, h, sf, sb);
  std::vector<Edge> loop{seam(hem_back, hem_front, -cfg.real(pre + "hem_curve"), "hem"),
                         seam(hem_front, cap_front.start, underarm, "underarm_front"), cap_front, cap_back,
                         seam(cap_back.end, hem_back, underarm, "underarm_back")};
  const double slit = cfg.real(pre + "slit");
  if (slit >= kMinSlit) {
    split_labelled(loop, "underarm_front", slit, false);
    split_labelled(loop, "underarm_back", 1.0 - slit, true);
  }

  const double sign = side == Side::right ? -1.0 : 1.0;
  const double angle = cfg.real(pre + "placement_angle");
  const std::array<double, 3> at{sign * (b.shoulder_width / 2.0 + 5.0),
                                 b.waist_to_floor + b.waist_length() - h, 0.0};
  Component c;
  c.name = name;
  c.kind = ProgramKind::sleeve;
  c.panels.push_back(
      make_panel(name, "sleeve", std::move(loop), PanelPlacement::from_axis_angle(0.0, 0.0, 1.0, sign * angle, at)));
  const Panel& p = c.panels[0];
  c.internal_stitches.push_back(stitch(ref(p, "underarm_front"), ref(p, "underarm_back")));
  c.interfaces["cap"] = {ref(p, "cap_front"), ref(p, "cap_back")};
  c.interfaces["wrist"] = {ref(p, "hem")};

  const bool cuffed = side == Side::left && cfg.boolean("sleeve.asymmetric") ? cfg.boolean("cuff_left.enabled")
                                                                              : cfg.boolean("cuff.enabled");
  if (cuffed)
    c.children.push_back(draft_cuff(cfg, b, length(p, "hem"), side, "cuff_" + std::string(to_string(side))));
  return c;
}

double cap_length(const Component& sleeve) {
  double total = 0.0;
  for (const EdgeRef& r : sleeve.interface("cap"))
    total += geometry::curve_length(sleeve.find_panel(r.panel)->edges[r.edge]);
  return total;
}

Component draft_cuff(const DesignConfiguration& cfg, const BodyMeasurements& b, double hem_len, Side side,
                     const std::string& name) {
  validate_body(b);
  if (!(hem_len > 0.0)) throw DraftError("INVALID_HEM", "sleeve hem length must be positive");
  // The left cuff follows the left sleeve's parameter set.
  const std::string pre = side_prefix(cfg, "cuff", "sleeve.asymmetric", side);
  // A cuff never gathers a sleeve by more than 3.5:1.
  const double top = std::max(b.wrist_circ * (1.0 + cfg.real(pre + "ease")), hem_len / 3.5);
  const double bottom = top * (1.0 + cfg.real(pre + "flare"));
  const double height = cfg.real(pre + "length");
  const double end_curve = cfg.real(pre + "end_curve");
  const Vec2 b0{-bottom / 2.0, 0.0};
  const Vec2 b1{bottom / 2.0, 0.0};
  const Vec2 t1{top / 2.0, height};
  const Vec2 t0{-top / 2.0, height};
  std::vector<Edge> loop{seam(b0, b1, -cfg.real(pre + "hem_curve"), "hem"), seam(b1, t1, -end_curve, "end_front"),
                         Edge::line(t1, t0, "top"), seam(t0, b0, -end_curve, "end_back")};
  const double sign = side == Side::right ? -1.0 : 1.0;
  const std::array<double, 3> at{sign * (b.shoulder_width / 2.0 + b.arm_length), b.waist_to_floor, 0.0};
  Component c;
  c.name = name;
  c.kind = ProgramKind::cuff;
  c.panels.push_back(make_panel(name, "cuff", std::move(loop), PanelPlacement::from_axis_angle(0, 0, 1, 0, at)));
  const Panel& p = c.panels[0];
  c.internal_stitches.push_back(stitch(ref(p, "end_front"), ref(p, "end_back")));
  c.interfaces["wrist"] = {ref(p, "top")};
  return c;
}

}  // namespace gdsl::garment
