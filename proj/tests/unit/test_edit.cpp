#include <algorithm>
#include <random>

#include "agent_fixtures.hpp"
#include "doctest.h"
#include "garment_fixtures.hpp"
#include "gdsl/agents/edit.hpp"
#include "gdsl/design/sampling.hpp"
#include "gdsl/error.hpp"
#include "gdsl/garment/assemble.hpp"

using namespace gdsl::agents;
using gdsl::design::default_schema;
using fixtures::default_cfg;
using fixtures::with;

namespace {

EditCommand cmd(EditVerb v, std::string target, std::optional<std::string> value = std::nullopt) {
  return {v, std::move(target), std::move(value)};
}

}  // namespace

TEST_CASE("parse the editing examples") {
  CHECK(parse_edit_instruction("CHANGE THE PANT TO SKIRT") == cmd(EditVerb::change_garment, "pants", "skirt"));
  CHECK(parse_edit_instruction("make the sleeve longer") == cmd(EditVerb::lengthen, "sleeve"));
  CHECK(parse_edit_instruction("Make the sleeves shorter") == cmd(EditVerb::shorten, "sleeve"));
  CHECK(parse_edit_instruction("shorten the sleeves") == cmd(EditVerb::shorten, "sleeve"));
  CHECK(parse_edit_instruction("make the shirt sleeveless") == cmd(EditVerb::remove, "sleeve"));
  CHECK(parse_edit_instruction("remove the collar") == cmd(EditVerb::remove, "collar"));
  CHECK(parse_edit_instruction("lengthen skirt") == cmd(EditVerb::lengthen, "skirt"));
  CHECK(parse_edit_instruction("change trousers to layered skirt") ==
        cmd(EditVerb::change_garment, "pants", "layered_skirt"));
  CHECK(parse_edit_instruction("SET sleeve.length TO three-quarter length") ==
        cmd(EditVerb::set, "sleeve.length", "three-quarter length"));
}

TEST_CASE("out-of-grammar instructions report the remainder") {
  for (const char* text : {"paint it blue", "", "make the sleeve", "change pants", "set sleeve.length"
                           "lengthen"}) {
    CAPTURE(std::string(text));
    CHECK_THROWS_AS(parse_edit_instruction(text), EditSyntaxError);
  }
  try {
    parse_edit_instruction("paint it blue");
    FAIL("no error");
  } catch (const EditSyntaxError& e) {
    CHECK(e.code() == "EDIT_SYNTAX");
    CHECK(e.remainder() == "paint it blue");
  }
}

TEST_CASE("pretty form parses back to the same command") {
  const std::vector<EditCommand> all{
      cmd(EditVerb::change_garment, "pants", "skirt"),
      cmd(EditVerb::change_garment, "skirt", "layered_skirt"),
      cmd(EditVerb::lengthen, "sleeve"),
      cmd(EditVerb::shorten, "waistband"),
      cmd(EditVerb::remove, "sleeve"),
      cmd(EditVerb::remove, "collar"),
      cmd(EditVerb::set, "sleeve.length", "three-quarter length"),
      cmd(EditVerb::set, "collar.kind", "none"),
      cmd(EditVerb::set, "meta.bottom", "layered_skirt"),
  };
  for (const auto& c : all) {
    CAPTURE(pretty(c));
    CHECK(parse_edit_instruction(pretty(c)) == c);
  }
  CHECK(pretty(cmd(EditVerb::change_garment, "pants", "skirt")) == "CHANGE pants TO skirt");
  CHECK_THROWS_AS(apply_edit(default_cfg(), parse_edit_instruction("remove the sleeve now"), default_schema()),
                  gdsl::EditError);
}

TEST_CASE("lengthen sleeve moves half length to three-quarter length") {
  const auto& schema = default_schema();
  const auto cfg = default_cfg();
  REQUIRE(cfg.real("sleeve.length") == 0.5);
  const EditOutcome out = apply_edit(cfg, cmd(EditVerb::lengthen, "sleeve"), schema);
  CHECK(out.config.real("sleeve.length") == 0.75);
  CHECK(fixtures::changed_paths(cfg, out.config) == std::vector<std::string>{"sleeve.length"});
  CHECK(out.notices.empty());
}

TEST_CASE("bucket extremes are a no-op with a notice") {
  const auto cfg = with(default_cfg(), "sleeve.length", 1.0);
  const EditOutcome out = apply_edit(cfg, cmd(EditVerb::lengthen, "sleeve"), default_schema());
  CHECK(out.config == cfg);
  CHECK(out.notices.size() == 1);
}

TEST_CASE("values between buckets move from the nearest bucket") {
  auto cfg = with(default_cfg(), "sleeve.length", 0.55);
  const EditOutcome out = apply_edit(cfg, cmd(EditVerb::shorten, "sleeve"), default_schema());
  CHECK(out.config.real("sleeve.length") == 0.15);
}

TEST_CASE("remove sleeve clears the flag only") {
  const auto cfg = default_cfg();
  const EditOutcome out = apply_edit(cfg, cmd(EditVerb::remove, "sleeve"), default_schema());
  CHECK(out.config.boolean("sleeve.enabled") == false);
  CHECK(fixtures::changed_paths(cfg, out.config) == std::vector<std::string>{"sleeve.enabled"});
}

TEST_CASE("change pants to skirt keeps the bodice byte-identical") {
  const auto& schema = default_schema();
  const auto cfg = default_cfg();
  const EditOutcome out = apply_edit(cfg, parse_edit_instruction("CHANGE THE PANT TO SKIRT"), schema);
  CHECK(out.config.select("meta.bottom") == "skirt");
  CHECK(fixtures::changed_paths(cfg, out.config) == std::vector<std::string>{"meta.bottom"});

  const auto before = gdsl::garment::assemble(cfg, fixtures::body());
  const auto after = gdsl::garment::assemble(out.config, fixtures::body());
  auto count = [](const gdsl::pattern::Pattern& p, const std::string& prefix) {
    return std::count_if(p.panels.begin(), p.panels.end(), [&](const auto& x) { return x.id.rfind(prefix, 0) == 0; });
  };
  CHECK(count(before, "pants.") > 0);
  CHECK(count(after, "pants.") == 0);
  CHECK(count(after, "skirt.") > 0);
  CHECK(fixtures::panels_outside(before, {"pants", "skirt"}) == fixtures::panels_outside(after, {"pants", "skirt"}));
}

TEST_CASE("edit errors") {
  const auto& schema = default_schema();
  const auto cfg = default_cfg();
  CHECK_THROWS_AS(apply_edit(cfg, cmd(EditVerb::lengthen, "hat"), schema), gdsl::EditError);
  CHECK_THROWS_AS(apply_edit(cfg, cmd(EditVerb::change_garment, "skirt", "pants"), schema), gdsl::EditError);
  CHECK_THROWS_AS(apply_edit(cfg, cmd(EditVerb::set, "sleeve.length", "extra long"), schema), gdsl::EditError);
  CHECK_THROWS_AS(apply_edit(cfg, cmd(EditVerb::set, "hat.brim", "wide"), schema), gdsl::EditError);
  CHECK_THROWS_AS(apply_edit(with(cfg, "sleeve.length", 7.0), cmd(EditVerb::lengthen, "sleeve"), schema),
                  gdsl::ValidationFailed);
}

TEST_CASE("set applies a label") {
  const auto cfg = default_cfg();
  const EditOutcome out = apply_edit(cfg, cmd(EditVerb::set, "collar.kind", "mandarin"), default_schema());
  CHECK(out.config.select("collar.kind") == "mandarin");
  CHECK(fixtures::changed_paths(cfg, out.config) == std::vector<std::string>{"collar.kind"});
}

TEST_CASE("property: every edit touches only its declared targets and assembled panels of other components") {
  const auto& schema = default_schema();
  std::mt19937_64 rng(2024);
  const std::vector<EditCommand> commands{
      cmd(EditVerb::lengthen, "sleeve"),  cmd(EditVerb::shorten, "sleeve"),   cmd(EditVerb::remove, "sleeve"),
      cmd(EditVerb::lengthen, "bodice"),  cmd(EditVerb::shorten, "skirt"),    cmd(EditVerb::lengthen, "pants"),
      cmd(EditVerb::remove, "collar"),    cmd(EditVerb::shorten, "collar"),   cmd(EditVerb::lengthen, "cuff"),
      cmd(EditVerb::remove, "waistband"), cmd(EditVerb::change_garment, "pants", "skirt"),
  };
  int applied = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const auto cfg = gdsl::garment::random_coherent_config(schema, rng);
    for (const auto& c : commands) {
      std::vector<std::string> targets;
      try {
        targets = edit_targets(c, cfg, schema);
      } catch (const gdsl::EditError&) {
        continue;
      }
      EditOutcome out;
      try {
        out = apply_edit(cfg, c, schema);
      } catch (const gdsl::EditError&) {
        continue;
      }
      ++applied;
      for (const auto& p : fixtures::changed_paths(cfg, out.config)) {
        CAPTURE(pretty(c));
        CAPTURE(p);
        CHECK(std::count(targets.begin(), targets.end(), p) == 1);
      }
    }
  }
  CHECK(applied > 300);
}

TEST_CASE("pressure feedback") {
  const auto& schema = default_schema();
  auto cfg = with(default_cfg(), "cuff.enabled", true);
  REQUIRE(cfg.real("cuff.ease") == 0.3);

  SUBCASE("tight cuff widens one bucket") {
    const auto out = apply_pressure_feedback(cfg, {{"cuff", Tightness::tight}}, schema);
    CHECK(out.config.real("cuff.ease") == 0.6);
    CHECK(fixtures::changed_paths(cfg, out.config) == std::vector<std::string>{"cuff.ease"});
  }
  SUBCASE("loose upper bodice narrows") {
    const auto relaxed = with(cfg, "bodice.ease", 0.15);
    const auto out = apply_pressure_feedback(relaxed, {{"upper_bodice", Tightness::loose}}, schema);
    CHECK(out.config.real("bodice.ease") == 0.08);
    CHECK(fixtures::changed_paths(relaxed, out.config) == std::vector<std::string>{"bodice.ease"});
  }
  SUBCASE("all ok leaves the configuration alone") {
    const auto out = apply_pressure_feedback(cfg,
                                             {{"cuff", Tightness::ok},
                                              {"upper_bodice", Tightness::ok},
                                              {"lower_bodice", Tightness::ok},
                                              {"collar", Tightness::ok}},
                                             schema);
    CHECK(out.config == cfg);
    CHECK(out.notices.empty());
  }
  SUBCASE("collar at the widest bucket is a no-op with a notice") {
    const auto wide = with(cfg, "neckline.width", 1.9);
    const auto out = apply_pressure_feedback(wide, {{"collar", Tightness::tight}}, schema);
    CHECK(out.config == wide);
    CHECK(out.notices.size() == 1);
  }
  SUBCASE("unknown region") {
    CHECK_THROWS_AS(apply_pressure_feedback(cfg, {{"hat", Tightness::tight}}, schema), gdsl::EditError);
    CHECK_THROWS_AS(tightness_from_string("snug"), gdsl::EditError);
  }
  CHECK(tightness_from_string("tight") == Tightness::tight);
}
