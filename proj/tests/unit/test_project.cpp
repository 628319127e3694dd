#include "doctest.h"
#include "gdsl/design/project.hpp"
#include "gdsl/error.hpp"
#include "schema_fixtures.hpp"

using namespace gdsl::design;

namespace {

std::vector<Answer> default_answers(const DesignSchema& s) {
  std::vector<Answer> out;
  const DesignConfiguration d = s.defaults();
  for (const ParamSpec& p : s.params()) out.push_back({p.path, label_for_value(p, d.at(p.path))});
  return out;
}

}  // namespace

TEST_CASE("bucket label maps to its fraction of the range") {
  const DesignSchema s = fixtures::schema_with("skirt.length", [](ParamSpec& p) {
    p.min = 20.0;
    p.max = 100.0;
    p.default_value = 60.0;
    p.descriptive_buckets = {{"half length", 20.0 + 0.5 * 80.0},
                             {"three-quarter length", 20.0 + 0.75 * 80.0},
                             {"full length", 100.0}};
  });
  auto answers = default_answers(s);
  answers.push_back({"skirt.length", "half length"});
  CHECK(project_answers(answers, s).real("skirt.length") == doctest::Approx(60.0));
}

TEST_CASE("yes/no and select answers") {
  const DesignSchema& s = default_schema();
  auto answers = default_answers(s);
  answers.push_back({"waistband.enabled", "yes"});
  answers.push_back({"collar.kind", "mandarin"});
  const DesignConfiguration cfg = project_answers(answers, s);
  CHECK(cfg.boolean("waistband.enabled"));
  CHECK(cfg.select("collar.kind") == "mandarin");
  CHECK(*s.at("collar.kind").option_index(cfg.select("collar.kind")) == 2);
  CHECK(project_answers(default_answers(s), s) != cfg);
}

TEST_CASE("labels are matched case-insensitively") {
  auto answers = default_answers(default_schema());
  answers.push_back({"sleeve.length", "  Three-Quarter Length "});
  CHECK(project_answers(answers, default_schema()).real("sleeve.length") == 0.75);
}

TEST_CASE("projection errors") {
  const DesignSchema& s = default_schema();
  auto answers = default_answers(s);
  answers.push_back({"sleeve.length", "extra long"});
  try {
    project_answers(answers, s);
    FAIL("expected ProjectionError");
  } catch (const gdsl::ProjectionError& e) {
    CHECK(e.code() == "UNKNOWN_LABEL");
    CHECK(std::string(e.what()).find("sleeve.length") != std::string::npos);
    CHECK(std::string(e.what()).find("extra long") != std::string::npos);
  }
  auto missing = default_answers(s);
  missing.pop_back();
  CHECK_THROWS_AS(project_answers(missing, s), gdsl::ProjectionError);
  auto unknown = default_answers(s);
  unknown.push_back({"hat.brim", "wide"});
  CHECK_THROWS_AS(project_answers(unknown, s), gdsl::ProjectionError);
}

TEST_CASE("choices per kind") {
  const DesignSchema& s = default_schema();
  CHECK(choices_for(s.at("sleeve.enabled")) == std::vector<std::string>{"yes", "no"});
  CHECK(choices_for(s.at("meta.bottom")).size() == 4);
  CHECK(choices_for(s.at("sleeve.length")).size() == s.at("sleeve.length").descriptive_buckets.size());
  ParamSpec bare = s.at("sleeve.length");
  bare.descriptive_buckets.clear();
  CHECK_THROWS_AS(choices_for(bare), gdsl::SchemaError);
}

TEST_CASE("label_for_value picks the nearest bucket") {
  const ParamSpec& p = default_schema().at("sleeve.length");
  CHECK(label_for_value(p, 0.5) == "half length");
  CHECK(label_for_value(p, 0.7) == "three-quarter length");
  CHECK(label_for_value(p, 0.1) == "cap length");
  CHECK(label_for_value(default_schema().at("layered_skirt.n_layers"), std::int64_t{4}) == "three layers");
}
