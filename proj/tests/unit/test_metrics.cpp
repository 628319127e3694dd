#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "gdsl/error.hpp"
#include "gdsl/geometry/metrics.hpp"

using namespace gdsl::geometry;

namespace {

double nearest(Vec2 p, const std::vector<Vec2>& set) {
  double best = INFINITY;
  for (Vec2 q : set) best = std::fmin(best, std::hypot(p.x - q.x, p.y - q.y));
  return best;
}

double oracle_chamfer(const std::vector<Vec2>& a, const std::vector<Vec2>& b) {
  double sa = 0, sb = 0;
  for (Vec2 p : a) sa += nearest(p, b);
  for (Vec2 p : b) sb += nearest(p, a);
  return 0.5 * (sa / a.size() + sb / b.size());
}

double oracle_f(const std::vector<Vec2>& a, const std::vector<Vec2>& b, double tau) {
  double pa = 0, rb = 0;
  for (Vec2 p : a) pa += nearest(p, b) <= tau;
  for (Vec2 p : b) rb += nearest(p, a) <= tau;
  const double precision = pa / a.size(), recall = rb / b.size();
  return precision + recall == 0 ? 0.0 : 2 * precision * recall / (precision + recall);
}

std::vector<Vec2> random_set(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-50, 50);
  std::vector<Vec2> s(1 + rng() % 300);
  for (Vec2& p : s) p = {u(rng), u(rng)};
  return s;
}

}  // namespace

TEST_CASE("chamfer_distance examples") {
  const std::vector<Vec2> a{{0, 0}, {1, 2}, {3, 3}};
  CHECK(chamfer_distance(a, a) == 0.0);
  CHECK(chamfer_distance(std::vector<Vec2>{{0, 0}}, std::vector<Vec2>{{3, 4}}) == doctest::Approx(5.0));
  // 0.5 * ((0 + 2) / 2 + 0)
  CHECK(chamfer_distance(std::vector<Vec2>{{0, 0}, {2, 0}}, std::vector<Vec2>{{0, 0}}) == doctest::Approx(0.5));
  CHECK_THROWS_AS(chamfer_distance(std::vector<Vec2>{}, a), gdsl::InvalidArgument);
}

TEST_CASE("f_score examples") {
  const std::vector<Vec2> a{{0, 0}, {1, 2}};
  CHECK(f_score(a, a, 0.001) == 1.0);
  CHECK(f_score(std::vector<Vec2>{{0, 0}}, std::vector<Vec2>{{10, 0}}, 1.0) == 0.0);
  CHECK(f_score(std::vector<Vec2>{{0, 0}, {10, 0}}, std::vector<Vec2>{{0, 0}}, 1.0) == doctest::Approx(2.0 / 3.0));
  const PrecisionRecall pr = precision_recall(std::vector<Vec2>{{0, 0}, {10, 0}}, std::vector<Vec2>{{0, 0}}, 1.0);
  CHECK(pr.precision == 0.5);
  CHECK(pr.recall == 1.0);
  CHECK_THROWS_AS(f_score(a, a, 0.0), gdsl::InvalidArgument);
  CHECK_THROWS_AS(f_score(a, std::vector<Vec2>{}, 1.0), gdsl::InvalidArgument);
}

TEST_CASE("property: metrics match the brute-force oracle") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 100; ++i) {
    const auto a = random_set(rng);
    const auto b = random_set(rng);
    CHECK(std::abs(chamfer_distance(a, b) - oracle_chamfer(a, b)) <= 1e-9);
    CHECK(chamfer_distance(a, b) == doctest::Approx(chamfer_distance(b, a)).epsilon(1e-12));
    double prev = 0.0;
    for (double tau : {0.5, 2.0, 5.0, 20.0}) {
      const double f = f_score(a, b, tau);
      CHECK(std::abs(f - oracle_f(a, b, tau)) <= 1e-9);
      CHECK(f >= prev);
      prev = f;
    }
    CHECK(f_score(a, a, 0.1) == 1.0);
    CHECK(chamfer_distance(a, a) == 0.0);
  }
}
