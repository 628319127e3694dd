#include "doctest.h"
#include "gdsl/error.hpp"
#include "gdsl/geometry/edge.hpp"

using namespace gdsl::geometry;

TEST_CASE("control count follows the edge kind") {
  CHECK(control_count(EdgeKind::line) == 0);
  CHECK(control_count(EdgeKind::quadratic) == 1);
  CHECK(control_count(EdgeKind::cubic) == 2);
  CHECK(control_polygon(Edge::cubic({0, 0}, {1, 1}, {2, 1}, {3, 0})).size == 4);
}

TEST_CASE("kind names round-trip") {
  for (EdgeKind k : {EdgeKind::line, EdgeKind::quadratic, EdgeKind::cubic}) {
    CHECK(edge_kind_from_string(to_string(k)) == k);
  }
  CHECK_FALSE(edge_kind_from_string("spline").has_value());
}

TEST_CASE("degenerate chords are rejected") {
  CHECK(is_degenerate(Edge::line({0, 0}, {0.005, 0})));
  CHECK_FALSE(is_degenerate(Edge::line({0, 0}, {0.01, 0})));
  CHECK_THROWS_AS(require_non_degenerate(Edge::quadratic({1, 1}, {5, 5}, {1, 1})), gdsl::DegenerateGeometry);
}

TEST_CASE("evaluate hits endpoints and the quadratic midpoint") {
  const Edge q = Edge::quadratic({0, 0}, {1, 1}, {2, 0});
  CHECK(evaluate(q, 0.0) == Vec2{0, 0});
  CHECK(evaluate(q, 1.0) == Vec2{2, 0});
  CHECK(evaluate(q, 0.5).x == doctest::Approx(1.0));
  CHECK(evaluate(q, 0.5).y == doctest::Approx(0.5));
}

TEST_CASE("reversal traverses the same curve backwards") {
  const Edge c = Edge::cubic({0, 0}, {1, 3}, {4, -2}, {5, 1});
  const Edge r = reversed(c);
  for (double t : {0.0, 0.2, 0.5, 0.9}) {
    CHECK(evaluate(r, t).x == doctest::Approx(evaluate(c, 1.0 - t).x));
    CHECK(evaluate(r, t).y == doctest::Approx(evaluate(c, 1.0 - t).y));
  }
}

TEST_CASE("split pieces reproduce the original curve") {
  const Edge c = Edge::cubic({0, 0}, {1, 3}, {4, -2}, {5, 1}, "x");
  const auto [left, right] = split_edge(c, 0.3);
  CHECK(left.end == right.start);
  CHECK(left.label == "x");
  for (double u : {0.0, 0.25, 0.5, 1.0}) {
    const Vec2 a = evaluate(left, u);
    const Vec2 b = evaluate(c, 0.3 * u);
    CHECK(a.x == doctest::Approx(b.x));
    CHECK(a.y == doctest::Approx(b.y));
    const Vec2 d = evaluate(right, u);
    const Vec2 e = evaluate(c, 0.3 + 0.7 * u);
    CHECK(d.x == doctest::Approx(e.x));
    CHECK(d.y == doctest::Approx(e.y));
  }
  CHECK_THROWS_AS(split_edge(c, 0.0), gdsl::InvalidArgument);
  CHECK_THROWS_AS(split_edge(c, 1.0), gdsl::InvalidArgument);
}

TEST_CASE("bulged edges bend to the left for positive bulge") {
  const Edge e = bulged({0, 0}, {10, 0}, 0.1);
  CHECK(e.kind == EdgeKind::quadratic);
  CHECK(e.control[0].x == doctest::Approx(5.0));
  CHECK(e.control[0].y == doctest::Approx(1.0));
}
