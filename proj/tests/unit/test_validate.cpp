#include "doctest.h"
#include "gdsl/pattern/validate.hpp"
#include "pattern_fixtures.hpp"

using namespace gdsl::pattern;
using fixtures::Vec2;

TEST_CASE("two stitched unit squares pass") {
  const ValidityReport r = validate_pattern(fixtures::two_squares_stitched());
  CHECK(r.passed);
  CHECK(r.violations.empty());
}

TEST_CASE("empty pattern passes") { CHECK(validate_pattern(Pattern{}).passed); }

TEST_CASE("bowtie panel reports self intersection") {
  Pattern p;
  p.panels.push_back(fixtures::bowtie("bow"));
  const ValidityReport r = validate_pattern(p);
  CHECK_FALSE(r.passed);
  CHECK(r.has(codes::kSelfIntersect));
  CHECK(r.violations.front().subject == "bow");
}

TEST_CASE("10 cm to 14 cm stitch at ruffle 1 is a length mismatch") {
  Pattern p;
  p.panels.push_back(fixtures::polygon_panel("a", {{0, 0}, {10, 0}, {10, 10}, {0, 10}}));
  p.panels.push_back(fixtures::polygon_panel("b", {{0, 0}, {14, 0}, {14, 10}, {0, 10}}));
  p.stitches.push_back({{"a", 0}, {"b", 0}, 1.0});
  const ValidityReport r = validate_pattern(p);
  REQUIRE(r.has(codes::kLengthMismatch));
  const Violation& v = r.violations.back();
  bool found_ratio = false;
  for (const auto& [name, value] : v.measured) {
    if (name == "ratio") {
      found_ratio = true;
      CHECK(value == doctest::Approx(10.0 / 14.0));
    }
  }
  CHECK(found_ratio);

  // The same pair is compatible once the declared ruffle matches.
  p.stitches[0].ruffle_factor = 10.0 / 14.0;
  CHECK(validate_pattern(p).passed);
  // 5% boundary: ratio 1.04 at ruffle 1 is fine, 1.06 is not.
  p.panels[1] = fixtures::polygon_panel("b", {{0, 0}, {10.0 / 1.04, 0}, {10.0 / 1.04, 10}, {0, 10}});
  p.stitches[0].ruffle_factor = 1.0;
  CHECK(validate_pattern(p).passed);
  p.panels[1] = fixtures::polygon_panel("b", {{0, 0}, {10.0 / 1.06, 0}, {10.0 / 1.06, 10}, {0, 10}});
  CHECK(validate_pattern(p).has(codes::kLengthMismatch));
}

TEST_CASE("open and degenerate panels") {
  Pattern p;
  fixtures::Panel open = fixtures::square("open");
  open.edges[2].end = {0.5, 1.5};
  p.panels.push_back(open);
  fixtures::Panel tiny = fixtures::square("tiny");
  tiny.edges.insert(tiny.edges.begin() + 1, gdsl::geometry::Edge::line({1, 0}, {1, 0}));
  p.panels.push_back(tiny);
  fixtures::Panel two;
  two.id = "two";
  two.edges = {gdsl::geometry::Edge::line({0, 0}, {1, 0}), gdsl::geometry::Edge::line({1, 0}, {0, 0})};
  p.panels.push_back(two);
  const ValidityReport r = validate_pattern(p);
  CHECK(r.has(codes::kNotClosed));
  CHECK(r.has(codes::kEdgeDegenerate));
  CHECK(r.has(codes::kTooFewEdges));
}

TEST_CASE("stitch reference problems are all listed") {
  Pattern p = fixtures::two_squares_stitched();
  p.panels.push_back(fixtures::square("a"));
  p.panels.back().placement.rotation = {0.9, 0, 0, 0};
  p.stitches.push_back({{"ghost", 0}, {"a", 0}, 1.0});
  p.stitches.push_back({{"a", 0}, {"a", 0}, 1.0});
  p.stitches.push_back({{"b", 0}, {"a", 2}, 9.0});
  p.stitches.push_back({{"a", 1}, {"b", 1}, 1.0});
  p.stitches.push_back({{"b", 9}, {"a", 3}, 1.0});
  const ValidityReport r = validate_pattern(p);
  CHECK(r.has(codes::kDuplicatePanelId));
  CHECK(r.has(codes::kPlacementNotUnit));
  CHECK(r.has(codes::kStitchUnresolved));
  CHECK(r.has(codes::kStitchSelf));
  CHECK(r.has(codes::kRuffleRange));
  CHECK(r.has(codes::kEdgeMultiStitch));
  CHECK(r.violations.size() >= 6);
}

TEST_CASE("curved panels are checked on their discretization") {
  Pattern p;
  fixtures::Panel panel = fixtures::square("c", 10.0);
  // A bulge deep enough to cross the opposite side.
  panel.edges[0] = gdsl::geometry::Edge::quadratic({0, 0}, {5, 30}, {10, 0});
  p.panels.push_back(panel);
  CHECK(validate_pattern(p).has(codes::kSelfIntersect));
  p.panels[0].edges[0] = gdsl::geometry::Edge::quadratic({0, 0}, {5, -3}, {10, 0});
  CHECK(validate_pattern(p).passed);
}

TEST_CASE("validate_pattern is pure") {
  Pattern p = fixtures::two_squares_stitched();
  p.panels.push_back(fixtures::bowtie("bow"));
  CHECK(validate_pattern(p) == validate_pattern(p));
}
