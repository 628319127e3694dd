#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"
#include "gdsl/error.hpp"
#include "gdsl/geometry/polygon.hpp"

using namespace gdsl::geometry;

namespace {

// O(n^2) oracle written independently of the sweep.
bool brute_force_simple(const std::vector<Vec2>& p) {
  const std::size_t n = p.size();
  auto side = [](Vec2 o, Vec2 a, Vec2 b) {
    const double v = (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
  };
  auto within = [](Vec2 a, Vec2 b, Vec2 q) {
    return q.x >= std::fmin(a.x, b.x) && q.x <= std::fmax(a.x, b.x) && q.y >= std::fmin(a.y, b.y) &&
           q.y <= std::fmax(a.y, b.y);
  };
  auto cross_each_other = [&](Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
    const int d1 = side(c, d, a), d2 = side(c, d, b), d3 = side(a, b, c), d4 = side(a, b, d);
    if (d1 * d2 < 0 && d3 * d4 < 0) return true;
    return (d1 == 0 && within(c, d, a)) || (d2 == 0 && within(c, d, b)) || (d3 == 0 && within(a, b, c)) ||
           (d4 == 0 && within(a, b, d));
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (p[i] == p[(i + 1) % n]) return false;
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
      if (adjacent) {
        // Shared vertex only: fail if collinear and folding back.
        const bool forward = j == i + 1;
        const Vec2 shared = forward ? p[j] : p[0];
        const Vec2 a = forward ? p[i] : p[1];
        const Vec2 c = forward ? p[(j + 1) % n] : p[n - 1];
        if (side(a, shared, c) == 0 && ((a.x - shared.x) * (c.x - shared.x) + (a.y - shared.y) * (c.y - shared.y)) > 0)
          return false;
        continue;
      }
      if (cross_each_other(p[i], p[(i + 1) % n], p[j], p[(j + 1) % n])) return false;
    }
  }
  return true;
}

std::vector<Vec2> random_polygon(std::mt19937_64& rng, std::size_t n, bool star) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Vec2> pts(n);
  if (star) {
    std::vector<double> angles(n);
    for (double& a : angles) a = u(rng) * 2.0 * std::numbers::pi;
    std::sort(angles.begin(), angles.end());
    for (std::size_t i = 0; i < n; ++i) {
      const double r = 1.0 + 4.0 * u(rng);
      pts[i] = {r * std::cos(angles[i]), r * std::sin(angles[i])};
    }
  } else {
    for (Vec2& p : pts) p = {u(rng) * 10.0, u(rng) * 10.0};
  }
  return pts;
}

}  // namespace

TEST_CASE("is_simple_polygon examples") {
  CHECK(is_simple_polygon(std::vector<Vec2>{{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
  CHECK_FALSE(is_simple_polygon(std::vector<Vec2>{{0, 0}, {1, 1}, {1, 0}, {0, 1}}));
  std::vector<Vec2> gon(100);
  for (int i = 0; i < 100; ++i) {
    const double a = 2.0 * std::numbers::pi * i / 100;
    gon[i] = {std::cos(a), std::sin(a)};
  }
  CHECK(is_simple_polygon(gon));
  CHECK_THROWS_AS(is_simple_polygon(std::vector<Vec2>{{0, 0}, {1, 0}}), gdsl::InvalidArgument);
}

TEST_CASE("touching and folded polygons are not simple") {
  // Vertex of one side lies on a non-adjacent side.
  CHECK_FALSE(is_simple_polygon(std::vector<Vec2>{{0, 0}, {4, 0}, {4, 4}, {2, 0}, {0, 4}}));
  // Spike folding back along its own side.
  CHECK_FALSE(is_simple_polygon(std::vector<Vec2>{{0, 0}, {4, 0}, {2, 0}, {2, 3}}));
  // Repeated vertex.
  CHECK_FALSE(is_simple_polygon(std::vector<Vec2>{{0, 0}, {4, 0}, {4, 0}, {0, 4}}));
  // Collinear but straight-through vertex is allowed.
  CHECK(is_simple_polygon(std::vector<Vec2>{{0, 0}, {2, 0}, {4, 0}, {4, 4}}));
}

TEST_CASE("property: agrees with the brute-force oracle on random polygons up to 64 vertices") {
  std::mt19937_64 rng(2024);
  int simple = 0;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 3 + rng() % 62;
    const auto pts = random_polygon(rng, n, i % 2 == 0);
    const bool expected = brute_force_simple(pts);
    simple += expected;
    CHECK(is_simple_polygon(pts) == expected);
  }
  CHECK(simple > 100);
  CHECK(simple < 900);
}
