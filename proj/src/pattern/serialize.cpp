#include "gdsl/pattern/serialize.hpp"

#include <cmath>

#include "gdsl/detail/json_doc.hpp"

namespace gdsl::pattern {
namespace {

using detail::Json;
using geometry::Vec2;

Json point_json(Vec2 p) { return Json::array({p.x, p.y}); }

Vec2 read_point(const Json& j, const std::string& path) {
  detail::require_array(j, path);
  if (j.size() != 2) throw ParseError("WRONG_TYPE", "expected a 2-element point", path);
  return {detail::require_number(j[0], detail::child_path(path, 0)),
          detail::require_number(j[1], detail::child_path(path, 1))};
}

Json edge_json(const Edge& e) {
  Json j;
  j["kind"] = std::string(geometry::to_string(e.kind));
  j["start"] = point_json(e.start);
  j["end"] = point_json(e.end);
  Json controls = Json::array();
  for (std::size_t i = 0; i < geometry::control_count(e.kind); ++i) controls.push_back(point_json(e.control[i]));
  j["control"] = std::move(controls);
  if (!e.label.empty()) j["label"] = e.label;
  return j;
}

Edge read_edge(const Json& j, const std::string& path) {
  detail::require_object(j, path);
  const std::string kind_path = detail::child_path(path, "kind");
  const auto kind = geometry::edge_kind_from_string(detail::require_string(detail::require_field(j, "kind", path), kind_path));
  if (!kind) throw ParseError("WRONG_TYPE", "unknown edge kind", kind_path);
  Edge e;
  e.kind = *kind;
  e.start = read_point(detail::require_field(j, "start", path), detail::child_path(path, "start"));
  e.end = read_point(detail::require_field(j, "end", path), detail::child_path(path, "end"));
  const std::string cpath = detail::child_path(path, "control");
  const Json& controls = detail::require_array(detail::require_field(j, "control", path), cpath);
  if (controls.size() != geometry::control_count(e.kind)) {
    throw ParseError("INVARIANT_VIOLATION",
                     "edge kind '" + std::string(geometry::to_string(e.kind)) + "' needs " +
                         std::to_string(geometry::control_count(e.kind)) + " control points, got " +
                         std::to_string(controls.size()),
                     cpath);
  }
  for (std::size_t i = 0; i < controls.size(); ++i) e.control[i] = read_point(controls[i], detail::child_path(cpath, i));
  if (auto it = j.find("label"); it != j.end()) e.label = detail::require_string(*it, detail::child_path(path, "label"));
  return e;
}

EdgeRef read_ref(const Json& j, const std::string& path) {
  detail::require_object(j, path);
  EdgeRef r;
  r.panel = detail::require_string(detail::require_field(j, "panel", path), detail::child_path(path, "panel"));
  const std::int64_t idx = detail::require_integer(detail::require_field(j, "edge", path), detail::child_path(path, "edge"));
  if (idx < 0) throw ParseError("WRONG_TYPE", "edge index must be non-negative", detail::child_path(path, "edge"));
  r.edge = static_cast<std::size_t>(idx);
  return r;
}

Json ref_json(const EdgeRef& r) {
  Json j;
  j["panel"] = r.panel;
  j["edge"] = r.edge;
  return j;
}

}  // namespace

std::string serialize_pattern(const Pattern& p) {
  Json doc;
  doc["format"] = kPatternFormat;
  doc["version"] = kPatternVersion;
  if (p.provenance) doc["provenance"] = *p.provenance;
  Json panels = Json::array();
  for (const Panel& panel : p.panels) {
    Json jp;
    jp["id"] = panel.id;
    Json placement;
    placement["rotation"] = Json::array();
    for (double c : panel.placement.rotation) placement["rotation"].push_back(c);
    placement["translation"] = Json::array();
    for (double c : panel.placement.translation) placement["translation"].push_back(c);
    jp["placement"] = std::move(placement);
    Json edges = Json::array();
    for (const Edge& e : panel.edges) edges.push_back(edge_json(e));
    jp["edges"] = std::move(edges);
    panels.push_back(std::move(jp));
  }
  doc["panels"] = std::move(panels);
  Json stitches = Json::array();
  for (const Stitch& s : p.stitches) {
    Json js;
    js["side_a"] = ref_json(s.side_a);
    js["side_b"] = ref_json(s.side_b);
    js["ruffle_factor"] = s.ruffle_factor;
    stitches.push_back(std::move(js));
  }
  doc["stitches"] = std::move(stitches);
  return doc.dump(2) + "\n";
}

Pattern deserialize_pattern(std::string_view text) {
  const Json doc = detail::parse_document(text);
  detail::require_object(doc, "");
  const std::string format = detail::require_string(detail::require_field(doc, "format", ""), "/format");
  if (format != kPatternFormat) throw ParseError("WRONG_FORMAT", "not a pattern document", "/format");

  Pattern p;
  if (auto it = doc.find("provenance"); it != doc.end()) p.provenance = detail::require_string(*it, "/provenance");

  const Json& panels = detail::require_array(detail::require_field(doc, "panels", ""), "/panels");
  for (std::size_t i = 0; i < panels.size(); ++i) {
    const std::string path = detail::child_path("/panels", i);
    const Json& jp = detail::require_object(panels[i], path);
    Panel panel;
    panel.id = detail::require_string(detail::require_field(jp, "id", path), detail::child_path(path, "id"));
    const std::string ppath = detail::child_path(path, "placement");
    const Json& placement = detail::require_object(detail::require_field(jp, "placement", path), ppath);
    const std::string rpath = detail::child_path(ppath, "rotation");
    const Json& rot = detail::require_array(detail::require_field(placement, "rotation", ppath), rpath);
    if (rot.size() != 4) throw ParseError("WRONG_TYPE", "rotation must have 4 components", rpath);
    for (std::size_t k = 0; k < 4; ++k) panel.placement.rotation[k] = detail::require_number(rot[k], detail::child_path(rpath, k));
    if (std::abs(quaternion_norm(panel.placement) - 1.0) > kQuaternionTolerance) {
      throw ParseError("INVARIANT_VIOLATION",
                       "rotation quaternion norm " + std::to_string(quaternion_norm(panel.placement)) + " is not 1",
                       rpath);
    }
    const std::string tpath = detail::child_path(ppath, "translation");
    const Json& tr = detail::require_array(detail::require_field(placement, "translation", ppath), tpath);
    if (tr.size() != 3) throw ParseError("WRONG_TYPE", "translation must have 3 components", tpath);
    for (std::size_t k = 0; k < 3; ++k) panel.placement.translation[k] = detail::require_number(tr[k], detail::child_path(tpath, k));
    const std::string epath = detail::child_path(path, "edges");
    const Json& edges = detail::require_array(detail::require_field(jp, "edges", path), epath);
    for (std::size_t k = 0; k < edges.size(); ++k) panel.edges.push_back(read_edge(edges[k], detail::child_path(epath, k)));
    p.panels.push_back(std::move(panel));
  }

  const Json& stitches = detail::require_array(detail::require_field(doc, "stitches", ""), "/stitches");
  for (std::size_t i = 0; i < stitches.size(); ++i) {
    const std::string path = detail::child_path("/stitches", i);
    const Json& js = detail::require_object(stitches[i], path);
    Stitch s;
    s.side_a = read_ref(detail::require_field(js, "side_a", path), detail::child_path(path, "side_a"));
    s.side_b = read_ref(detail::require_field(js, "side_b", path), detail::child_path(path, "side_b"));
    if (auto it = js.find("ruffle_factor"); it != js.end())
      s.ruffle_factor = detail::require_number(*it, detail::child_path(path, "ruffle_factor"));
    p.stitches.push_back(std::move(s));
  }
  return p;
}

}  // namespace gdsl::pattern
