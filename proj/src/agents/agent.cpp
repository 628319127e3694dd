#include "gdsl/agents/agent.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "gdsl/error.hpp"

namespace gdsl::agents {

std::string_view to_string(DesignInput::Kind k) {
  switch (k) {
    case DesignInput::Kind::text: return "text";
    case DesignInput::Kind::image_file: return "image";
    case DesignInput::Kind::sketch_file: return "sketch";
  }
  return "text";
}

DesignInput::Kind input_kind_from_string(std::string_view name) {
  if (name == "text") return DesignInput::Kind::text;
  if (name == "image") return DesignInput::Kind::image_file;
  if (name == "sketch") return DesignInput::Kind::sketch_file;
  throw InputError("UNKNOWN_INPUT_KIND", "input kind must be text, image or sketch, got '" + std::string(name) + "'");
}

std::string read_input_file(const DesignInput& input) {
  if (input.kind == DesignInput::Kind::text) throw InputError("NOT_A_FILE", "text input has no file");
  std::ifstream in(input.payload, std::ios::binary);
  if (!in) throw InputError("FILE_UNREADABLE", "cannot read design input file '" + input.payload + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void check_input(const DesignInput& input) {
  if (input.kind == DesignInput::Kind::text) {
    if (input.payload.find_first_not_of(" \t\r\n") == std::string::npos)
      throw InputError("EMPTY_INPUT", "design description is empty");
    return;
  }
  read_input_file(input);
}

MockAgent::MockAgent(std::map<std::string, std::string> table, std::string comparison_reply)
    : table_(std::move(table)), comparison_reply_(std::move(comparison_reply)) {}

MockAgent& MockAgent::withhold(std::size_t round, std::set<std::string> paths) {
  std::lock_guard lock(mu_);
  withheld_[round].insert(paths.begin(), paths.end());
  return *this;
}

MockAgent& MockAgent::garble(std::size_t round, const std::string& path, std::string label) {
  std::lock_guard lock(mu_);
  garbled_[{round, path}] = std::move(label);
  return *this;
}

std::vector<Answer> MockAgent::answer(const Prompt& prompt, const DesignInput&) {
  std::lock_guard lock(mu_);
  const std::size_t round = received_.size();
  received_.push_back(prompt);
  const auto skipped = [&](const std::string& path) {
    for (std::size_t key : {round, kAlways}) {
      auto it = withheld_.find(key);
      if (it != withheld_.end() && it->second.count(path)) return true;
    }
    return false;
  };
  std::vector<Answer> out;
  for (const Question& q : prompt.questions) {
    if (skipped(q.param_path)) continue;
    if (auto g = garbled_.find({round, q.param_path}); g != garbled_.end()) {
      out.push_back({q.param_path, g->second});
      continue;
    }
    if (auto it = table_.find(q.param_path); it != table_.end()) out.push_back({q.param_path, it->second});
  }
  return out;
}

std::string MockAgent::compare(const std::string& query, const DesignInput&) {
  std::lock_guard lock(mu_);
  queries_.push_back(query);
  return comparison_reply_;
}

std::size_t MockAgent::rounds() const {
  std::lock_guard lock(mu_);
  return received_.size();
}

std::vector<Prompt> MockAgent::received() const {
  std::lock_guard lock(mu_);
  return received_;
}

std::vector<std::string> MockAgent::comparison_queries() const {
  std::lock_guard lock(mu_);
  return queries_;
}

std::map<std::string, std::string> default_answer_table(const DesignSchema& schema) {
  std::map<std::string, std::string> table;
  for (const Answer& a : describe(schema.defaults(), schema)) table[a.param_path] = a.label;
  return table;
}

namespace {

struct Rule {
  const char* keyword;
  std::vector<std::pair<const char*, const char*>> answers;
};

// Applied in order; later rules override earlier ones.
const std::vector<Rule>& keyword_rules() {
  static const std::vector<Rule> rules = {
      {"skirt", {{"meta.bottom", "skirt"}}},
      {"tiered", {{"meta.bottom", "layered_skirt"}}},
      {"layered", {{"meta.bottom", "layered_skirt"}}},
      {"pants", {{"meta.bottom", "pants"}}},
      {"trousers", {{"meta.bottom", "pants"}}},
      {"shorts", {{"meta.bottom", "pants"}, {"pants.length", "shorts"}}},
      {"top only", {{"meta.bottom", "none"}}},
      {"dress", {{"meta.upper", "bodice"}, {"meta.bottom", "skirt"}}},
      {"mini", {{"skirt.length", "mini length"}, {"layered_skirt.length", "mini length"}}},
      {"midi", {{"skirt.length", "midi length"}, {"layered_skirt.length", "midi length"}}},
      {"maxi", {{"skirt.length", "full length"}, {"layered_skirt.length", "full length"}}},
      {"flounce", {{"skirt.flounce", "yes"}}},
      {"ruffle", {{"skirt.flounce", "yes"}}},
      {"turn-up", {{"pants.turnup", "yes"}}},
      {"cuffed", {{"pants.turnup", "yes"}}},
      {"short sleeve", {{"sleeve.length", "cap length"}}},
      {"half sleeve", {{"sleeve.length", "half length"}}},
      {"three-quarter sleeve", {{"sleeve.length", "three-quarter length"}}},
      {"long sleeve", {{"sleeve.length", "full length"}}},
      {"sleeveless", {{"sleeve.enabled", "no"}, {"cuff.enabled", "no"}}},
      {"cuffs", {{"cuff.enabled", "yes"}}},
      {"v-neck", {{"neckline.kind", "v"}}},
      {"v neck", {{"neckline.kind", "v"}}},
      {"boat neck", {{"neckline.kind", "boat"}}},
      {"square neck", {{"neckline.kind", "square"}}},
      {"band collar", {{"collar.kind", "band"}}},
      {"mandarin", {{"collar.kind", "mandarin"}}},
      {"turtleneck", {{"collar.kind", "turtleneck"}}},
      {"waistband", {{"waistband.enabled", "yes"}}},
      {"cropped", {{"bodice.length", "cropped"}}},
      {"tunic", {{"bodice.length", "tunic length"}}},
      {"oversized", {{"bodice.ease", "oversized"}}},
      {"fitted", {{"bodice.ease", "fitted"}}},
  };
  return rules;
}

}  // namespace

std::map<std::string, std::string> keyword_answer_table(const DesignInput& input, const DesignSchema& schema) {
  std::map<std::string, std::string> table = default_answer_table(schema);
  if (input.kind != DesignInput::Kind::text) return table;
  std::string text = input.payload;
  std::transform(text.begin(), text.end(), text.begin(), [](unsigned char c) { return std::tolower(c); });
  for (const Rule& r : keyword_rules()) {
    if (text.find(r.keyword) == std::string::npos) continue;
    for (const auto& [path, label] : r.answers)
      if (schema.find(path)) table[path] = label;
  }
  return table;
}

}  // namespace gdsl::agents
