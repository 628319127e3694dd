#include <numeric>

#include "builder.hpp"

namespace gdsl::garment {

using namespace detail;

Component draft_collar(const DesignConfiguration& cfg, const BodyMeasurements& b,
                       const std::vector<double>& neckline_lengths) {
  validate_body(b);
  Component c;
  c.name = "collar";
  c.kind = ProgramKind::collar;
  const std::string& kind = cfg.select("collar.kind");
  if (kind == "none") return c;
  if (neckline_lengths.empty()) throw DraftError("INVALID_NECKLINE", "collar needs at least one neckline edge");
  for (double l : neckline_lengths)
    if (!(l > geometry::kMinChord)) throw DraftError("INVALID_NECKLINE", "neckline edge lengths must be positive");

  const double bottom = std::accumulate(neckline_lengths.begin(), neckline_lengths.end(), 0.0);
  double top = bottom * cfg.real("collar.top_ratio");
  if (kind == "mandarin") top *= cfg.real("collar.mandarin_taper");
  double height = cfg.real("collar.height");
  if (kind == "turtleneck") height *= cfg.real("collar.turtle_fold");

  // Bottom runs left to right in pieces matching the neckline edges.
  std::vector<Edge> loop;
  double x = -bottom / 2.0;
  for (std::size_t i = 0; i < neckline_lengths.size(); ++i) {
    const double next = i + 1 == neckline_lengths.size() ? bottom / 2.0 : x + neckline_lengths[i];
    loop.push_back(Edge::line({x, 0.0}, {next, 0.0}, "bottom_" + std::to_string(i)));
    x = next;
  }
  const double end_curve = cfg.real("collar.end_curve");
  const Vec2 tr{top / 2.0, height};
  const Vec2 tl{-top / 2.0, height};
  loop.push_back(seam({bottom / 2.0, 0.0}, tr, -end_curve, "end_front"));
  loop.push_back(seam(tr, tl, -cfg.real("collar.top_curve"), "top"));
  loop.push_back(seam(tl, {-bottom / 2.0, 0.0}, -end_curve, "end_back"));

  const std::array<double, 3> at{-bottom / 2.0, b.waist_to_floor + b.waist_length() + cfg.real("collar.placement_lift"),
                                 0.0};
  c.panels.push_back(make_panel("collar", "band", std::move(loop), PanelPlacement::from_axis_angle(0, 0, 1, 0, at)));
  const Panel& p = c.panels[0];
  c.internal_stitches.push_back(stitch(ref(p, "end_front"), ref(p, "end_back")));
  auto& iface = c.interfaces["neckline"];
  for (std::size_t i = 0; i < neckline_lengths.size(); ++i) iface.push_back(ref(p, "bottom_" + std::to_string(i)));
  return c;
}

}  // namespace gdsl::garment
