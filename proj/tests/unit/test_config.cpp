#include "doctest.h"
#include "gdsl/design/config.hpp"
#include "gdsl/design/schema.hpp"
#include "gdsl/error.hpp"
#include "gdsl/resources.hpp"

using namespace gdsl::design;

TEST_CASE("shipped default configuration is valid and equals schema defaults") {
  const DesignConfiguration cfg = read_config(gdsl::resources::default_cfg, default_schema());
  CHECK(validate_config(cfg, default_schema()).empty());
  CHECK(cfg == default_schema().defaults());
}

TEST_CASE("out-of-range value") {
  DesignConfiguration cfg = default_schema().defaults();
  cfg.assignments["sleeve.length"] = -5.0;
  const auto v = validate_config(cfg, default_schema());
  REQUIRE(v.size() == 1);
  CHECK(v[0].path == "sleeve.length");
  CHECK(v[0].reason == ViolationReason::out_of_range);
}

TEST_CASE("missing, unknown and wrong-kind values") {
  DesignConfiguration cfg = default_schema().defaults();
  cfg.assignments.erase("collar.kind");
  cfg.assignments["collar.color"] = std::string("red");
  cfg.assignments["sleeve.enabled"] = 1.0;
  cfg.assignments["neckline.kind"] = std::string("sweetheart");
  const auto v = validate_config(cfg, default_schema());
  REQUIRE(v.size() == 4);
  CHECK(v[0] == ConfigViolation{"sleeve.enabled", ViolationReason::wrong_kind, v[0].message});
  CHECK(v[1].path == "collar.kind");
  CHECK(v[1].reason == ViolationReason::missing);
  CHECK(v[2].path == "neckline.kind");
  CHECK(v[2].reason == ViolationReason::out_of_range);
  CHECK(v[3].path == "collar.color");
  CHECK(v[3].reason == ViolationReason::unknown_path);
  CHECK(to_string(ViolationReason::unknown_path) == "unknown-path");
}

TEST_CASE("config documents round trip and coerce whole numbers") {
  DesignConfiguration cfg = default_schema().defaults();
  cfg.assignments["sleeve.length"] = 0.75;
  const DesignConfiguration back = read_config(write_config(cfg, default_schema()), default_schema());
  CHECK(back == cfg);
  const DesignConfiguration coerced =
      read_config(R"({"design": {"bodice.placement_depth": 12, "layered_skirt.n_layers": 4.0}})", default_schema());
  CHECK(std::holds_alternative<double>(coerced.at("bodice.placement_depth")));
  CHECK(std::holds_alternative<std::int64_t>(coerced.at("layered_skirt.n_layers")));
  CHECK_THROWS_AS(read_config(R"({"design": {"a.b": null}})", default_schema()), gdsl::ParseError);
  CHECK_THROWS_AS(read_config("{", default_schema()), gdsl::ParseError);
}

TEST_CASE("config_diff and typed accessors") {
  DesignConfiguration a = default_schema().defaults();
  DesignConfiguration b = a;
  b.assignments["meta.bottom"] = std::string("skirt");
  b.assignments.erase("sleeve.flare");
  CHECK(config_diff(a, b) == std::vector<std::string>{"meta.bottom", "sleeve.flare"});
  CHECK(a.select("meta.bottom") == "pants");
  CHECK(a.boolean("sleeve.enabled"));
  CHECK(a.integer("layered_skirt.n_layers") == 3);
  CHECK_THROWS_AS(a.real("sleeve.enabled"), gdsl::InvalidArgument);
  CHECK_THROWS_AS(a.at("x.y"), gdsl::InvalidArgument);
}
