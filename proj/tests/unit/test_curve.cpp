#include <cmath>
#include <random>

#include "doctest.h"
#include "gdsl/error.hpp"
#include "gdsl/geometry/curve.hpp"

using namespace gdsl::geometry;

namespace {

// Dense uniform-parameter polyline; independent of the adaptive scheme.
double polyline_length(const Edge& e, int segments) {
  double total = 0.0;
  Vec2 prev = e.start;
  for (int i = 1; i <= segments; ++i) {
    const double t = static_cast<double>(i) / segments;
    const double mt = 1.0 - t;
    Vec2 p;
    if (e.kind == EdgeKind::quadratic) {
      p = {mt * mt * e.start.x + 2 * mt * t * e.control[0].x + t * t * e.end.x,
           mt * mt * e.start.y + 2 * mt * t * e.control[0].y + t * t * e.end.y};
    } else if (e.kind == EdgeKind::cubic) {
      p = {mt * mt * mt * e.start.x + 3 * mt * mt * t * e.control[0].x + 3 * mt * t * t * e.control[1].x + t * t * t * e.end.x,
           mt * mt * mt * e.start.y + 3 * mt * mt * t * e.control[0].y + 3 * mt * t * t * e.control[1].y + t * t * t * e.end.y};
    } else {
      p = {mt * e.start.x + t * e.end.x, mt * e.start.y + t * e.end.y};
    }
    total += std::hypot(p.x - prev.x, p.y - prev.y);
    prev = p;
  }
  return total;
}

Edge random_edge(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-20.0, 20.0);
  auto pt = [&] { return Vec2{u(rng), u(rng)}; };
  Vec2 a = pt();
  Vec2 b = pt();
  while (distance(a, b) < 1.0) b = pt();
  switch (rng() % 3) {
    case 0: return Edge::line(a, b);
    case 1: return Edge::quadratic(a, pt(), b);
    default: return Edge::cubic(a, pt(), pt(), b);
  }
}

}  // namespace

TEST_CASE("curve_length examples") {
  CHECK(curve_length(Edge::line({0, 0}, {3, 4})) == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(curve_length(Edge::cubic({0, 0}, {3, 0}, {7, 0}, {10, 0})) == doctest::Approx(10.0).epsilon(1e-9));
  // Closed form of the arc length of this parabola.
  const double exact = std::sqrt(2.0) + std::asinh(1.0);
  CHECK(exact == doctest::Approx(2.2955871).epsilon(1e-7));
  const Edge q = Edge::quadratic({0, 0}, {1, 1}, {2, 0});
  CHECK(std::abs(curve_length(q) - 2.29559) <= 1e-3);
  CHECK(std::abs(curve_length(q) - polyline_length(q, 1000000)) <= 1e-6);
}

TEST_CASE("curve_length rejects degenerate edges") {
  CHECK_THROWS_AS(curve_length(Edge::line({1, 1}, {1, 1})), gdsl::DegenerateGeometry);
}

TEST_CASE("property: curve_length within 1e-4 relative of a 10x denser sampling") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const Edge e = random_edge(rng);
    const double len = curve_length(e);
    const double dense = polyline_length(e, 200000);
    CHECK(std::abs(len - dense) <= 1e-4 * dense);
    CHECK(len >= chord_length(e) - 1e-12);
  }
}

TEST_CASE("property: curve_length is invariant under rigid motion") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> ang(-3.14159, 3.14159);
  std::uniform_real_distribution<double> off(-100.0, 100.0);
  for (int i = 0; i < 200; ++i) {
    const Edge e = random_edge(rng);
    const Edge moved = transformed(e, ang(rng), {off(rng), off(rng)});
    CHECK(std::abs(curve_length(moved) - curve_length(e)) <= 1e-6 * curve_length(e));
  }
}

TEST_CASE("sample_curve examples") {
  const PointSet2D line = sample_curve(Edge::line({0, 0}, {2, 0}), 3);
  REQUIRE(line.size() == 3);
  CHECK(line[1] == Vec2{1, 0});
  CHECK(line[2] == Vec2{2, 0});
  const Edge q = Edge::quadratic({0, 0}, {1, 1}, {2, 0});
  const PointSet2D qs = sample_curve(q, 3);
  CHECK(qs[1].x == doctest::Approx(1.0));
  CHECK(qs[1].y == doctest::Approx(0.5));
  const PointSet2D two = sample_curve(q, 2);
  CHECK(two[0] == q.start);
  CHECK(two[1] == q.end);
  CHECK_THROWS_AS(sample_curve(q, 1), gdsl::InvalidArgument);
}

TEST_CASE("sample_curve pins endpoints exactly") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const Edge e = random_edge(rng);
    const PointSet2D s = sample_curve(e, 17);
    CHECK(s.front() == e.start);
    CHECK(s.back() == e.end);
  }
}

TEST_CASE("discretize_loop sample counts") {
  const std::vector<Edge> loop{Edge::line({0, 0}, {10, 0}), Edge::quadratic({10, 0}, {12, 5}, {10, 10}),
                               Edge::line({10, 10}, {0, 10}), Edge::line({0, 10}, {0, 0})};
  const PointSet2D pts = discretize_loop(loop);
  CHECK(pts.size() == 1 + (kSamplesPerCurvedEdge - 1) + 1 + 1);
  const BoundingBox box = bounding_box(pts);
  CHECK(box.min.x == 0.0);
  CHECK(box.max.y == 10.0);
  CHECK(box.max.x > 10.0);
}
