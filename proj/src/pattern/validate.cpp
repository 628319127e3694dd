#include "gdsl/pattern/validate.hpp"

#include <cmath>
#include <map>
#include <set>

#include "gdsl/geometry/curve.hpp"
#include "gdsl/geometry/polygon.hpp"

namespace gdsl::pattern {
namespace {

std::string stitch_name(std::size_t i) { return "stitch[" + std::to_string(i) + "]"; }

std::string ref_text(const EdgeRef& r) { return r.panel + "#" + std::to_string(r.edge); }

class Checker {
 public:
  explicit Checker(const Pattern& p) : p_(p) {}

  ValidityReport run() {
    check_panels();
    check_simplicity();
    check_stitch_refs();
    check_single_use();
    check_lengths();
    report_.passed = report_.violations.empty();
    return std::move(report_);
  }

 private:
  void add(std::string code, std::string subject, std::string message,
           std::vector<std::pair<std::string, double>> measured = {}) {
    report_.violations.push_back({std::move(code), std::move(subject), std::move(message), std::move(measured)});
  }

  void check_panels() {
    std::set<std::string> seen;
    for (std::size_t pi = 0; pi < p_.panels.size(); ++pi) {
      const Panel& panel = p_.panels[pi];
      bool closed = true;
      if (!seen.insert(panel.id).second) add(codes::kDuplicatePanelId, panel.id, "panel id is not unique");
      const double qn = quaternion_norm(panel.placement);
      if (!(std::abs(qn - 1.0) <= kQuaternionTolerance))
        add(codes::kPlacementNotUnit, panel.id, "placement rotation is not a unit quaternion", {{"norm", qn}});
      if (panel.edges.size() < 3) {
        add(codes::kTooFewEdges, panel.id, "a panel needs at least 3 edges",
            {{"edges", static_cast<double>(panel.edges.size())}});
        closed = false;
      }
      for (std::size_t i = 0; i < panel.edges.size(); ++i) {
        if (geometry::is_degenerate(panel.edges[i])) {
          add(codes::kEdgeDegenerate, panel.id, "edge " + std::to_string(i) + " is shorter than 0.01 cm",
              {{"edge", static_cast<double>(i)}, {"chord", geometry::chord_length(panel.edges[i])}});
          closed = false;
        }
      }
      if (panel.edges.size() >= 2) {
        for (std::size_t i = 0; i < panel.edges.size(); ++i) {
          const auto& cur = panel.edges[i];
          const auto& next = panel.edges[(i + 1) % panel.edges.size()];
          const double gap = geometry::distance(cur.end, next.start);
          if (!(gap <= kClosureGap)) {
            add(codes::kNotClosed, panel.id,
                "edge " + std::to_string(i) + " does not meet edge " +
                    std::to_string((i + 1) % panel.edges.size()),
                {{"edge", static_cast<double>(i)}, {"gap", gap}});
            closed = false;
          }
        }
      }
      closed_.push_back(closed);
    }
  }

  void check_simplicity() {
    for (std::size_t pi = 0; pi < p_.panels.size(); ++pi) {
      if (!closed_[pi]) continue;
      const Panel& panel = p_.panels[pi];
      const auto outline = geometry::discretize_loop(panel.edges);
      if (outline.size() < 3 || !geometry::is_simple_polygon(outline))
        add(codes::kSelfIntersect, panel.id, "panel outline intersects itself");
    }
  }

  void check_stitch_refs() {
    for (std::size_t si = 0; si < p_.stitches.size(); ++si) {
      const Stitch& s = p_.stitches[si];
      bool ok = true;
      for (const EdgeRef* r : {&s.side_a, &s.side_b}) {
        if (p_.find_edge(*r) == nullptr) {
          add(codes::kStitchUnresolved, stitch_name(si), "reference " + ref_text(*r) + " does not resolve");
          ok = false;
        }
      }
      if (s.side_a == s.side_b) {
        add(codes::kStitchSelf, stitch_name(si), "stitch joins an edge to itself");
        ok = false;
      }
      if (!(s.ruffle_factor >= kMinRuffle && s.ruffle_factor <= kMaxRuffle)) {
        add(codes::kRuffleRange, stitch_name(si), "ruffle factor outside [0.25, 4]", {{"ruffle", s.ruffle_factor}});
        ok = false;
      }
      resolved_.push_back(ok);
    }
  }

  void check_single_use() {
    std::map<EdgeRef, std::vector<std::size_t>> uses;
    for (std::size_t si = 0; si < p_.stitches.size(); ++si) {
      uses[p_.stitches[si].side_a].push_back(si);
      if (p_.stitches[si].side_b != p_.stitches[si].side_a) uses[p_.stitches[si].side_b].push_back(si);
    }
    for (const auto& [ref, list] : uses) {
      if (list.size() > 1)
        add(codes::kEdgeMultiStitch, ref.panel,
            "edge " + ref_text(ref) + " is used by " + std::to_string(list.size()) + " stitches",
            {{"edge", static_cast<double>(ref.edge)}, {"stitches", static_cast<double>(list.size())}});
    }
  }

  void check_lengths() {
    for (std::size_t si = 0; si < p_.stitches.size(); ++si) {
      if (!resolved_[si]) continue;
      const Stitch& s = p_.stitches[si];
      const Edge* a = p_.find_edge(s.side_a);
      const Edge* b = p_.find_edge(s.side_b);
      if (geometry::is_degenerate(*a) || geometry::is_degenerate(*b)) continue;
      const double la = geometry::curve_length(*a);
      const double lb = geometry::curve_length(*b);
      const double ratio = la / lb;
      const double rho = s.ruffle_factor;
      if (std::abs(ratio - rho) > kStitchLengthTolerance * rho) {
        add(codes::kLengthMismatch, stitch_name(si),
            "length ratio " + std::to_string(ratio) + " differs from ruffle " + std::to_string(rho) + " by more than 5%",
            {{"length_a", la}, {"length_b", lb}, {"ratio", ratio}, {"ruffle", rho}});
      }
    }
  }

  const Pattern& p_;
  ValidityReport report_;
  std::vector<bool> closed_;
  std::vector<bool> resolved_;
};

}  // namespace

bool ValidityReport::has(const std::string& code) const {
  for (const auto& v : violations)
    if (v.code == code) return true;
  return false;
}

ValidityReport validate_pattern(const Pattern& p) { return Checker(p).run(); }

}  // namespace gdsl::pattern
