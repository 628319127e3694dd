#include "gdsl/agents/prompt.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "gdsl/detail/json_doc.hpp"
#include "gdsl/error.hpp"
#include "gdsl/resources.hpp"

namespace gdsl::agents {
namespace {

using design::ParamKind;
using design::ParamSpec;

struct Templates {
  std::string boolean;
  std::string select;
  std::string numeric;
  std::map<std::string, std::string> components;
  std::map<std::string, std::string> attributes;
};

const Templates& templates() {
  static const Templates t = [] {
    const detail::Json doc = detail::parse_document(resources::question_templates_json);
    Templates out;
    out.boolean = detail::require_string(detail::require_field(doc, "boolean", ""), "/boolean");
    out.select = detail::require_string(detail::require_field(doc, "select", ""), "/select");
    out.numeric = detail::require_string(detail::require_field(doc, "numeric", ""), "/numeric");
    for (const auto& [k, v] : detail::require_object(detail::require_field(doc, "components", ""), "/components").items())
      out.components[k] = detail::require_string(v, "/components/" + k);
    for (const auto& [k, v] : detail::require_object(detail::require_field(doc, "attributes", ""), "/attributes").items())
      out.attributes[k] = detail::require_string(v, "/attributes/" + k);
    return out;
  }();
  return t;
}

std::string replace_all(std::string text, std::string_view key, const std::string& value) {
  for (std::size_t pos = text.find(key); pos != std::string::npos; pos = text.find(key, pos + value.size()))
    text.replace(pos, key.size(), value);
  return text;
}

std::string question_text(const ParamSpec& spec) {
  const Templates& t = templates();
  const auto dot = spec.path.find('.');
  const std::string group = spec.path.substr(0, dot);
  const auto comp = t.components.find(group);
  const std::string component = comp != t.components.end() ? comp->second : group;
  std::string attribute;
  if (auto it = t.attributes.find(spec.path); it != t.attributes.end()) {
    attribute = it->second;
  } else {
    attribute = spec.path.substr(dot + 1);
    std::replace(attribute.begin(), attribute.end(), '_', ' ');
  }
  const std::string& tmpl = spec.kind == ParamKind::boolean  ? t.boolean
                            : spec.kind == ParamKind::select ? t.select
                                                             : t.numeric;
  return replace_all(replace_all(tmpl, "{component}", component), "{attribute}", attribute);
}

std::string trim(std::string_view s, std::string_view chars = " \t\r\n`") {
  const auto b = s.find_first_not_of(chars);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(chars);
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

Prompt synthesize_prompt(const DesignSchema& schema) {
  Prompt p;
  p.preamble = std::string(resources::analysis_preamble_txt);
  for (const ParamSpec& spec : schema.params()) {
    std::vector<std::string> choices = design::choices_for(spec);
    if (choices.size() < 2)
      throw SchemaError("NO_CHOICES", spec.path + " offers fewer than two answer choices");
    p.questions.push_back({spec.path, question_text(spec), std::move(choices)});
  }
  return p;
}

Prompt subset(const Prompt& prompt, const std::vector<std::string>& paths) {
  const std::set<std::string> wanted(paths.begin(), paths.end());
  Prompt out{prompt.preamble, {}};
  for (const Question& q : prompt.questions)
    if (wanted.count(q.param_path)) out.questions.push_back(q);
  return out;
}

std::string render_prompt(const Prompt& prompt) {
  std::string out = prompt.preamble;
  if (!out.empty() && out.back() != '\n') out += '\n';
  for (const Question& q : prompt.questions) {
    out += "\n[" + q.param_path + "] " + q.text + "\nchoices: ";
    for (std::size_t i = 0; i < q.choices.size(); ++i) out += (i ? " | " : "") + q.choices[i];
    out += '\n';
  }
  return out;
}

AnswerCheck validate_answers(const std::vector<Answer>& answers, const DesignSchema& schema) {
  AnswerCheck check;
  std::set<std::string> answered;
  for (const Answer& a : answers) {
    answered.insert(a.param_path);
    const ParamSpec* spec = schema.find(a.param_path);
    if (spec == nullptr || !design::value_for_label(*spec, a.label)) check.invalid.push_back(a);
  }
  for (const ParamSpec& spec : schema.params())
    if (!answered.count(spec.path)) check.missing.push_back(spec.path);
  return check;
}

std::vector<Answer> parse_answer_table(std::string_view text) {
  std::vector<Answer> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) continue;
    std::string path = trim(line.substr(0, colon), " \t\r\n`-*[]");
    std::string label = trim(line.substr(colon + 1), " \t\r\n`\"'.");
    if (path.empty() || path.find(' ') != std::string::npos) continue;
    out.push_back({std::move(path), std::move(label)});
  }
  return out;
}

std::string format_answer_table(const std::vector<Answer>& answers) {
  std::string out;
  for (const Answer& a : answers) out += a.param_path + ": " + a.label + "\n";
  return out;
}

std::vector<Answer> describe(const design::DesignConfiguration& cfg, const DesignSchema& schema) {
  std::vector<Answer> out;
  for (const ParamSpec& spec : schema.params())
    out.push_back({spec.path, design::label_for_value(spec, cfg.at(spec.path))});
  return out;
}

}  // namespace gdsl::agents
