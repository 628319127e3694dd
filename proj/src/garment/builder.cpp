#include "builder.hpp"

#include <algorithm>

namespace gdsl::garment::detail {

Edge seam(Vec2 a, Vec2 b, double bulge, std::string label) {
  if (bulge == 0.0) return Edge::line(a, b, std::move(label));
  return geometry::bulged(a, b, bulge, std::move(label));
}

std::size_t edge_index(const Panel& p, const std::string& label) {
  for (std::size_t i = 0; i < p.edges.size(); ++i)
    if (p.edges[i].label == label) return i;
  throw DraftError("MISSING_EDGE", "panel " + p.id + " has no edge '" + label + "'");
}

EdgeRef ref(const Panel& p, const std::string& label) { return EdgeRef{p.id, edge_index(p, label)}; }

std::vector<Edge> mirrored(const std::vector<Edge>& loop) {
  std::vector<Edge> out;
  out.reserve(loop.size());
  for (auto it = loop.rbegin(); it != loop.rend(); ++it) {
    Edge e = geometry::reversed(*it);
    e.start.x = -e.start.x;
    e.end.x = -e.end.x;
    for (Vec2& c : e.control) c.x = -c.x;
    out.push_back(std::move(e));
  }
  return out;
}

namespace {

std::vector<Edge>::iterator find_label(std::vector<Edge>& loop, const std::string& label) {
  auto it = std::find_if(loop.begin(), loop.end(), [&](const Edge& e) { return e.label == label; });
  if (it == loop.end()) throw DraftError("MISSING_EDGE", "no edge '" + label + "' to split");
  return it;
}

}  // namespace

void split_labelled(std::vector<Edge>& loop, const std::string& label, double t, bool keep_start) {
  auto it = find_label(loop, label);
  auto [first, second] = geometry::split_edge(*it, t);
  (keep_start ? second : first).label = label + "_slit";
  *it = std::move(second);
  loop.insert(it, std::move(first));
}

void split_many(std::vector<Edge>& loop, const std::string& label, std::initializer_list<double> ts) {
  auto it = find_label(loop, label);
  std::vector<Edge> pieces;
  Edge rest = *it;
  double done = 0.0;
  for (double t : ts) {
    auto [head, tail] = geometry::split_edge(rest, (t - done) / (1.0 - done));
    pieces.push_back(std::move(head));
    rest = std::move(tail);
    done = t;
  }
  pieces.push_back(std::move(rest));
  for (std::size_t i = 0; i < pieces.size(); ++i) pieces[i].label = label + "_" + std::to_string(i);
  const auto pos = it - loop.begin();
  loop.erase(it);
  loop.insert(loop.begin() + pos, pieces.begin(), pieces.end());
}

Panel make_panel(const std::string& component, const std::string& name, std::vector<Edge> edges,
                 PanelPlacement placement) {
  for (const Edge& e : edges) {
    if (geometry::is_degenerate(e))
      throw DraftError("DEGENERATE_EDGE", component + "." + name + ": edge '" + e.label + "' collapsed");
  }
  Panel p{component + "." + name, std::move(edges), placement};
  pattern::normalize_panel_origin(p);
  return p;
}

Stitch stitch(EdgeRef a, EdgeRef b, double ruffle) { return Stitch{std::move(a), std::move(b), ruffle}; }

double length(const Panel& p, const std::string& label) {
  return geometry::curve_length(p.edges[edge_index(p, label)]);
}

std::string side_prefix(const DesignConfiguration& cfg, const std::string& base, const std::string& flag,
                        Side side) {
  if (side == Side::left && cfg.boolean(flag)) return base + "_left.";
  return base + ".";
}

}  // namespace gdsl::garment::detail
