#include <string>

#include "doctest.h"
#include "gdsl/error.hpp"
#include "gdsl/pattern/serialize.hpp"
#include "gdsl/pattern/stats.hpp"
#include "gdsl/pattern/validate.hpp"
#include "pattern_fixtures.hpp"

using namespace gdsl::pattern;
using gdsl::geometry::Edge;

namespace {

Pattern curved_pattern() {
  Pattern p = fixtures::two_squares_stitched();
  p.panels[0].edges[0] = Edge::quadratic({0, 0}, {0.5, -0.2}, {1, 0}, "hem");
  p.panels[1].edges[2] = Edge::cubic({1, 1}, {0.7, 1.3}, {0.3, 0.8}, {0, 1});
  p.panels[1].placement = PanelPlacement::from_axis_angle(0, 1, 0, 30.0, {1.5, -2.0, 12.0});
  p.provenance = "configs/default.cfg";
  return p;
}

std::string expect_parse_error(const std::string& text, const std::string& code) {
  try {
    deserialize_pattern(text);
  } catch (const gdsl::ParseError& e) {
    CHECK(e.code() == code);
    return e.field();
  }
  FAIL("expected ParseError " << code);
  return {};
}

}  // namespace

TEST_CASE("round trip preserves structure, validity and stats") {
  const Pattern p = curved_pattern();
  const Pattern back = deserialize_pattern(serialize_pattern(p));
  CHECK(back == p);
  CHECK(validate_pattern(back) == validate_pattern(p));
  CHECK(pattern_stats(back) == pattern_stats(p));
  CHECK(serialize_pattern(back) == serialize_pattern(p));
}

TEST_CASE("invalid patterns round-trip too") {
  Pattern p;
  p.panels.push_back(fixtures::bowtie("bow"));
  const Pattern back = deserialize_pattern(serialize_pattern(p));
  CHECK(back == p);
  CHECK(validate_pattern(back).has(codes::kSelfIntersect));
}

TEST_CASE("missing side_b names the field") {
  const std::string text = R"({"format": "gdsl-pattern", "version": 1,
    "panels": [], "stitches": [{"side_a": {"panel": "a", "edge": 0}, "ruffle_factor": 1}]})";
  CHECK(expect_parse_error(text, "MISSING_FIELD") == "/stitches/0/side_b");
}

TEST_CASE("non-unit quaternion is an invariant violation") {
  std::string text = serialize_pattern(fixtures::two_squares_stitched());
  const auto pos = text.find("\"rotation\"");
  REQUIRE(pos != std::string::npos);
  const auto open = text.find('[', pos);
  const auto close = text.find(']', pos);
  text.replace(open, close - open + 1, "[0.9, 0.0, 0.0, 0.0]");
  CHECK(expect_parse_error(text, "INVARIANT_VIOLATION") == "/panels/0/placement/rotation");
}

TEST_CASE("control count must match the kind") {
  const std::string text = R"({"format": "gdsl-pattern", "version": 1, "stitches": [],
    "panels": [{"id": "a", "placement": {"rotation": [1,0,0,0], "translation": [0,0,0]},
      "edges": [{"kind": "quadratic", "start": [0,0], "end": [1,0], "control": []}]}]})";
  CHECK(expect_parse_error(text, "INVARIANT_VIOLATION") == "/panels/0/edges/0/control");
}

TEST_CASE("syntax errors carry line and column") {
  try {
    deserialize_pattern("{\n  \"format\": \"gdsl-pattern\",\n  \"panels\": [,]\n}");
    FAIL("expected a syntax error");
  } catch (const gdsl::ParseError& e) {
    CHECK(e.code() == "SYNTAX");
    CHECK(e.line() == 3);
    CHECK(e.column() > 0);
  }
}

TEST_CASE("wrong field types are reported with their path") {
  const std::string text = R"({"format": "gdsl-pattern", "version": 1, "panels": [{"id": 7}], "stitches": []})";
  CHECK(expect_parse_error(text, "WRONG_TYPE") == "/panels/0/id");
  CHECK(expect_parse_error(R"({"format": "gdsl-pattern", "stitches": []})", "MISSING_FIELD") == "/panels");
}
