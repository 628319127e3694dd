#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "gdsl/design/quantize.hpp"
#include "gdsl/design/sampling.hpp"
#include "gdsl/error.hpp"
#include "schema_fixtures.hpp"

using namespace gdsl::design;

namespace {

DesignSchema schema_with_wide_float() {
  return fixtures::schema_with("bodice.placement_depth", [](ParamSpec& p) {
    p.min = 20.0;
    p.max = 120.0;
    p.default_value = 70.0;
    p.descriptive_buckets = {{"close", 30.0}, {"loose", 100.0}};
  });
}

}  // namespace

TEST_CASE("quantize examples") {
  const DesignSchema& s = default_schema();
  CHECK(quantize_value(s.at("sleeve.enabled"), true) == 1);
  CHECK(quantize_value(s.at("sleeve.enabled"), false) == 0);
  const DesignSchema wide = schema_with_wide_float();
  CHECK(quantize_value(wide.at("bodice.placement_depth"), 70.0) == 50);
  CHECK(std::get<double>(dequantize_token(wide.at("bodice.placement_depth"), 50)) == doctest::Approx(70.0));
  const DesignSchema lengths = fixtures::schema_with("neckline.kind", [](ParamSpec& p) {
    p.options = {"full length", "half length", "three-quarter length"};
    p.default_value = std::string("full length");
  });
  CHECK(quantize_value(lengths.at("neckline.kind"), std::string("three-quarter length")) == 2);
  CHECK(quantize_value(s.at("layered_skirt.n_layers"), std::int64_t{7}) == 7);
}

TEST_CASE("round half up") {
  const ParamSpec& p = default_schema().at("sleeve.taper");  // [0, 0.5]
  CHECK(quantize_value(p, 0.0025) == 1);                      // 0.5 rounds up
  CHECK(quantize_value(p, 0.0024) == 0);
  CHECK(quantize_value(p, 0.5) == 100);
}

TEST_CASE("quantize produces one token per parameter in schema order") {
  const TokenSequence t = quantize(default_schema().defaults(), default_schema());
  REQUIRE(t.tokens.size() == 122);
  CHECK(t.tokens[0] == 1);  // meta.upper = bodice
  CHECK(t.tokens[1] == 2);  // meta.bottom = pants
}

TEST_CASE("invalid configurations are refused") {
  DesignConfiguration cfg = default_schema().defaults();
  cfg.assignments.erase("collar.kind");
  CHECK_THROWS_AS(quantize(cfg, default_schema()), gdsl::ValidationFailed);
}

TEST_CASE("dequantize domain errors name the index") {
  TokenSequence t = quantize(default_schema().defaults(), default_schema());
  const std::size_t collar = *default_schema().index_of("collar.kind");
  t.tokens[collar] = 7;
  try {
    dequantize(t, default_schema());
    FAIL("expected TokenDomainError");
  } catch (const gdsl::TokenDomainError& e) {
    CHECK(e.code() == "OUT_OF_DOMAIN");
    CHECK(std::string(e.what()).find("index " + std::to_string(collar)) != std::string::npos);
  }
  t.tokens.pop_back();
  CHECK_THROWS_WITH_AS(dequantize(t, default_schema()), doctest::Contains("121"), gdsl::TokenDomainError);
}

TEST_CASE("property: quantize is independent of assignment insertion order") {
  std::mt19937_64 rng(1);
  const DesignConfiguration cfg = random_config(default_schema(), rng);
  DesignConfiguration rebuilt;
  std::vector<std::pair<std::string, Value>> items(cfg.assignments.begin(), cfg.assignments.end());
  std::shuffle(items.begin(), items.end(), rng);
  for (auto& [k, v] : items) rebuilt.assignments.emplace(k, v);
  CHECK(quantize(rebuilt, default_schema()) == quantize(cfg, default_schema()));
}

TEST_CASE("property: round trips over random configurations") {
  std::mt19937_64 rng(42);
  const DesignSchema& s = default_schema();
  for (int i = 0; i < 300; ++i) {
    const DesignConfiguration cfg = random_config(s, rng);
    const TokenSequence t = quantize(cfg, s);
    const DesignConfiguration back = dequantize(t, s);
    CHECK(validate_config(back, s).empty());
    CHECK(quantize(back, s) == t);
    for (const ParamSpec& p : s.params()) {
      if (p.kind == ParamKind::real) {
        CHECK(std::abs(back.real(p.path) - cfg.real(p.path)) <= (p.max - p.min) / 200.0 + 1e-12);
      } else {
        CHECK(back.at(p.path) == cfg.at(p.path));
      }
    }
  }
}

TEST_CASE("property: every admissible token survives token -> value -> token") {
  for (const ParamSpec& p : default_schema().params()) {
    const TokenDomain d = token_domain(p);
    for (std::int64_t t = d.lo; t <= d.hi; ++t) CHECK(quantize_value(p, dequantize_token(p, t)) == t);
  }
}
