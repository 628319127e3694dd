#include "gdsl/pattern/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "gdsl/detail/json_doc.hpp"
#include "gdsl/error.hpp"
#include "gdsl/geometry/curve.hpp"
#include "gdsl/pattern/validate.hpp"

namespace gdsl::pattern {
namespace {

constexpr double kUnitsPerCm = 10.0;
constexpr double kGutter = 5.0 * kUnitsPerCm;

using geometry::Vec2;

std::string num(double v) { return detail::format_fixed(v, 3); }

std::string xml_escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string stitch_colour(std::size_t index) {
  const double hue = std::fmod(static_cast<double>(index) * 137.508, 360.0);
  const double s = 0.65;
  const double l = 0.45;
  const double c = (1.0 - std::abs(2.0 * l - 1.0)) * s;
  const double hp = hue / 60.0;
  const double x = c * (1.0 - std::abs(std::fmod(hp, 2.0) - 1.0));
  double r = 0, g = 0, b = 0;
  if (hp < 1) { r = c; g = x; }
  else if (hp < 2) { r = x; g = c; }
  else if (hp < 3) { g = c; b = x; }
  else if (hp < 4) { g = x; b = c; }
  else if (hp < 5) { r = x; b = c; }
  else { r = c; b = x; }
  const double m = l - c / 2.0;
  auto channel = [&](double v) { return static_cast<int>(std::lround((v + m) * 255.0)); };
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", channel(r), channel(g), channel(b));
  return buf;
}

struct Frame {
  geometry::BoundingBox box;
  Vec2 origin;  // top-left corner of the cell in SVG units

  Vec2 map(Vec2 p) const {
    return {origin.x + (p.x - box.min.x) * kUnitsPerCm, origin.y + (box.max.y - p.y) * kUnitsPerCm};
  }
};

std::string point(const Frame& f, Vec2 p) {
  const Vec2 q = f.map(p);
  return num(q.x) + " " + num(q.y);
}

}  // namespace

std::string export_svg(const Pattern& p) {
  const ValidityReport report = validate_pattern(p);
  if (!report.passed) {
    throw ValidationFailed("cannot export an invalid pattern: " + report.violations.front().code + " on " +
                           report.violations.front().subject);
  }

  const std::size_t n = p.panels.size();
  std::vector<Frame> frames(n);
  double doc_w = 0.0;
  double doc_h = 0.0;
  if (n > 0) {
    const auto cols = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
    double y = kGutter;
    for (std::size_t row_start = 0; row_start < n; row_start += cols) {
      double x = kGutter;
      double row_h = 0.0;
      for (std::size_t i = row_start; i < std::min(n, row_start + cols); ++i) {
        frames[i].box = geometry::bounding_box(geometry::discretize_loop(p.panels[i].edges));
        frames[i].origin = {x, y};
        x += frames[i].box.width() * kUnitsPerCm + kGutter;
        row_h = std::max(row_h, frames[i].box.height() * kUnitsPerCm);
      }
      doc_w = std::max(doc_w, x);
      y += row_h + kGutter;
    }
    doc_h = y;
  }

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(doc_w) << "mm\" height=\""
      << num(doc_h) << "mm\" viewBox=\"0 0 " << num(doc_w) << " " << num(doc_h) << "\">\n";
  out << "<g class=\"panels\" fill=\"#f4f1ea\" stroke=\"#222222\" stroke-width=\"1\">\n";
  for (std::size_t i = 0; i < n; ++i) {
    const Panel& panel = p.panels[i];
    const Frame& f = frames[i];
    out << "<path id=\"" << xml_escape(panel.id) << "\" d=\"M " << point(f, panel.edges.front().start);
    for (const auto& e : panel.edges) {
      switch (e.kind) {
        case geometry::EdgeKind::line:
          out << " L " << point(f, e.end);
          break;
        case geometry::EdgeKind::quadratic:
          out << " Q " << point(f, e.control[0]) << " " << point(f, e.end);
          break;
        case geometry::EdgeKind::cubic:
          out << " C " << point(f, e.control[0]) << " " << point(f, e.control[1]) << " " << point(f, e.end);
          break;
      }
    }
    out << " Z\"/>\n";
  }
  out << "</g>\n";

  out << "<g class=\"stitches\" fill=\"none\" stroke-width=\"4\">\n";
  for (std::size_t si = 0; si < p.stitches.size(); ++si) {
    const Stitch& s = p.stitches[si];
    const std::string colour = stitch_colour(si);
    for (const EdgeRef* ref : {&s.side_a, &s.side_b}) {
      const auto it = std::find_if(p.panels.begin(), p.panels.end(), [&](const Panel& x) { return x.id == ref->panel; });
      const Frame& f = frames[static_cast<std::size_t>(it - p.panels.begin())];
      const auto& edge = it->edges[ref->edge];
      const std::size_t samples = edge.kind == geometry::EdgeKind::line ? 2 : geometry::kSamplesPerCurvedEdge;
      out << "<polyline data-stitch=\"" << si << "\" stroke=\"" << colour << "\" points=\"";
      bool first = true;
      for (Vec2 q : geometry::sample_curve(edge, samples)) {
        const Vec2 m = f.map(q);
        out << (first ? "" : " ") << num(m.x) << "," << num(m.y);
        first = false;
      }
      out << "\"/>\n";
    }
  }
  out << "</g>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace gdsl::pattern
