#include "gdsl/agents/edit.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "gdsl/design/project.hpp"

namespace gdsl::agents {
namespace {

using design::DesignConfiguration;
using design::DesignSchema;
using design::ParamKind;
using design::ParamSpec;

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::vector<std::string> words(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  if (!out.empty()) {
    std::string& last = out.back();
    while (!last.empty() && (last.back() == '.' || last.back() == '!')) last.pop_back();
    if (last.empty()) out.pop_back();
  }
  return out;
}

std::string join(const std::vector<std::string>& w, std::size_t from, std::size_t to, const char* sep = " ") {
  std::string out;
  for (std::size_t i = from; i < to; ++i) out += (i > from ? sep : "") + w[i];
  return out;
}

bool is_article(const std::string& w) { return w == "the" || w == "a" || w == "an"; }

std::vector<std::string> without_articles(const std::vector<std::string>& w) {
  std::vector<std::string> out;
  for (const auto& x : w)
    if (!is_article(x)) out.push_back(x);
  return out;
}

std::string canonical_target(const std::vector<std::string>& w, std::size_t from, std::size_t to) {
  static const std::map<std::string, std::string> aliases = {
      {"pant", "pants"},          {"trouser", "pants"},        {"trousers", "pants"},
      {"skirts", "skirt"},        {"layered skirt", "layered_skirt"}, {"tiered skirt", "layered_skirt"},
      {"sleeves", "sleeve"},      {"cuffs", "cuff"},           {"collars", "collar"},
      {"waist band", "waistband"}, {"shirt", "bodice"},         {"top", "bodice"},
      {"blouse", "bodice"},       {"turn-up", "turnup"},       {"turn-ups", "turnup"},
      {"turnups", "turnup"},      {"flounces", "flounce"}};
  const std::string spaced = join(w, from, to);
  if (auto it = aliases.find(spaced); it != aliases.end()) return it->second;
  return join(w, from, to, "_");
}

[[noreturn]] void syntax(const std::string& message, const std::string& remainder) {
  throw EditSyntaxError(message, remainder);
}

bool is_bottom(const std::string& g) { return g == "pants" || g == "skirt" || g == "layered_skirt"; }

std::vector<std::string> length_params(const std::string& target, const DesignConfiguration& cfg) {
  if (target == "sleeve") {
    if (cfg.boolean("sleeve.asymmetric")) return {"sleeve.length", "sleeve_left.length"};
    return {"sleeve.length"};
  }
  if (target == "cuff") {
    if (cfg.boolean("sleeve.asymmetric")) return {"cuff.length", "cuff_left.length"};
    return {"cuff.length"};
  }
  if (target == "skirt" && cfg.select("meta.bottom") == "layered_skirt") return {"layered_skirt.length"};
  static const std::map<std::string, std::string> single = {
      {"bodice", "bodice.length"},   {"skirt", "skirt.length"},       {"layered_skirt", "layered_skirt.length"},
      {"pants", "pants.length"},     {"collar", "collar.height"},     {"flounce", "skirt.flounce_length"},
      {"waistband", "waistband.width"}, {"turnup", "pants.turnup_height"}};
  if (auto it = single.find(target); it != single.end()) return {it->second};
  throw EditError("UNKNOWN_TARGET", "no length parameter for '" + target + "'");
}

std::vector<std::string> remove_params(const std::string& target) {
  static const std::map<std::string, std::vector<std::string>> table = {
      {"sleeve", {"sleeve.enabled"}},
      {"cuff", {"cuff.enabled", "cuff_left.enabled"}},
      {"collar", {"collar.kind"}},
      {"waistband", {"waistband.enabled"}},
      {"flounce", {"skirt.flounce"}},
      {"turnup", {"pants.turnup"}},
      {"bodice", {"meta.upper", "sleeve.enabled", "collar.kind"}},
      {"pants", {"meta.bottom"}},
      {"skirt", {"meta.bottom"}},
      {"layered_skirt", {"meta.bottom"}}};
  if (auto it = table.find(target); it != table.end()) return it->second;
  throw EditError("UNKNOWN_TARGET", "cannot remove '" + target + "'");
}

void require_valid(const DesignConfiguration& cfg, const DesignSchema& schema) {
  const auto v = design::validate_config(cfg, schema);
  if (!v.empty()) throw ValidationFailed("configuration is invalid: " + v.front().message);
}

const ParamSpec& spec_of(const DesignSchema& schema, const std::string& path) {
  const ParamSpec* s = schema.find(path);
  if (s == nullptr) throw EditError("UNKNOWN_TARGET", "unknown parameter '" + path + "'");
  return *s;
}

}  // namespace

std::string_view to_string(EditVerb v) {
  switch (v) {
    case EditVerb::set: return "set";
    case EditVerb::change_garment: return "change_garment";
    case EditVerb::remove: return "remove";
    case EditVerb::shorten: return "shorten";
    case EditVerb::lengthen: return "lengthen";
  }
  return "set";
}

EditCommand parse_edit_instruction(std::string_view text) {
  const std::vector<std::string> raw = words(lower(text));
  if (raw.empty()) syntax("empty edit instruction", "");
  const std::string& verb = raw[0];

  if (verb == "set") {
    // Labels keep their articles; only the path side drops them.
    std::size_t i = 1;
    while (i < raw.size() && is_article(raw[i])) ++i;
    if (i >= raw.size()) syntax("SET needs a parameter path", "");
    const std::string path = raw[i];
    if (i + 1 >= raw.size() || raw[i + 1] != "to") syntax("SET needs 'TO <label>'", join(raw, i + 1, raw.size()));
    if (i + 2 >= raw.size()) syntax("SET needs a label", "");
    return {EditVerb::set, path, join(raw, i + 2, raw.size())};
  }

  const std::vector<std::string> w = without_articles(raw);
  const std::size_t n = w.size();
  if (verb == "change") {
    const auto to = std::find(w.begin() + 1, w.end(), "to") - w.begin();
    if (static_cast<std::size_t>(to) == n) syntax("CHANGE needs 'TO <garment>'", join(w, 1, n));
    if (to == 1) syntax("CHANGE needs a garment before TO", join(w, 1, n));
    if (static_cast<std::size_t>(to) + 1 == n) syntax("CHANGE needs a garment after TO", "");
    return {EditVerb::change_garment, canonical_target(w, 1, to), canonical_target(w, to + 1, n)};
  }
  if (verb == "make") {
    if (n < 3) syntax("MAKE needs a target and SLEEVELESS, LONGER or SHORTER", join(w, 1, n));
    const std::string& how = w.back();
    if (how == "sleeveless") return {EditVerb::remove, "sleeve", std::nullopt};
    if (how == "longer") return {EditVerb::lengthen, canonical_target(w, 1, n - 1), std::nullopt};
    if (how == "shorter") return {EditVerb::shorten, canonical_target(w, 1, n - 1), std::nullopt};
    syntax("MAKE ends with SLEEVELESS, LONGER or SHORTER", how);
  }
  if (verb == "shorten" || verb == "lengthen" || verb == "remove") {
    if (n < 2) syntax(verb + " needs a target", "");
    const EditVerb v = verb == "shorten" ? EditVerb::shorten : verb == "lengthen" ? EditVerb::lengthen : EditVerb::remove;
    return {v, canonical_target(w, 1, n), std::nullopt};
  }
  syntax("unknown edit instruction", join(raw, 0, raw.size()));
}

std::string pretty(const EditCommand& cmd) {
  switch (cmd.verb) {
    case EditVerb::set: return "SET " + cmd.target + " TO " + cmd.value.value_or("");
    case EditVerb::change_garment: return "CHANGE " + cmd.target + " TO " + cmd.value.value_or("");
    case EditVerb::remove: return "REMOVE " + cmd.target;
    case EditVerb::shorten: return "SHORTEN " + cmd.target;
    case EditVerb::lengthen: return "LENGTHEN " + cmd.target;
  }
  return {};
}

std::vector<std::string> edit_targets(const EditCommand& cmd, const DesignConfiguration& cfg,
                                      const DesignSchema& schema) {
  switch (cmd.verb) {
    case EditVerb::set:
      spec_of(schema, cmd.target);
      return {cmd.target};
    case EditVerb::change_garment:
      if (!is_bottom(cmd.target) || !cmd.value || !is_bottom(*cmd.value))
        throw EditError("UNKNOWN_TARGET", "CHANGE switches between pants, skirt and layered_skirt, got '" + cmd.target +
                                              "' to '" + cmd.value.value_or("") + "'");
      return {"meta.bottom"};
    case EditVerb::remove: return remove_params(cmd.target);
    case EditVerb::shorten:
    case EditVerb::lengthen: return length_params(cmd.target, cfg);
  }
  return {};
}

bool move_bucket(DesignConfiguration& cfg, const ParamSpec& spec, int direction) {
  if (!spec.numeric() || spec.descriptive_buckets.empty())
    throw EditError("NOT_BUCKETED", spec.path + " has no descriptive buckets");
  const design::Value& current = cfg.at(spec.path);
  const double v = spec.kind == ParamKind::integer ? static_cast<double>(std::get<std::int64_t>(current))
                                                   : std::get<double>(current);
  const auto idx = static_cast<long>(design::nearest_bucket(spec, v)) + direction;
  if (idx < 0 || idx >= static_cast<long>(spec.descriptive_buckets.size())) return false;
  const double next = spec.descriptive_buckets[static_cast<std::size_t>(idx)].value;
  if (spec.kind == ParamKind::integer)
    cfg.assignments[spec.path] = static_cast<std::int64_t>(next);
  else
    cfg.assignments[spec.path] = next;
  return true;
}

EditOutcome apply_edit(const DesignConfiguration& cfg, const EditCommand& cmd, const DesignSchema& schema) {
  require_valid(cfg, schema);
  const std::vector<std::string> targets = edit_targets(cmd, cfg, schema);
  EditOutcome out{cfg, {}};
  auto& a = out.config.assignments;
  switch (cmd.verb) {
    case EditVerb::set: {
      const ParamSpec& spec = spec_of(schema, cmd.target);
      const auto value = design::value_for_label(spec, cmd.value.value_or(""));
      if (!value) {
        std::string choices;
        for (const auto& c : design::choices_for(spec)) choices += (choices.empty() ? "" : ", ") + c;
        throw EditError("INVALID_LABEL",
                        "'" + cmd.value.value_or("") + "' is not a choice for " + spec.path + " (" + choices + ")");
      }
      a[spec.path] = *value;
      break;
    }
    case EditVerb::change_garment:
      if (cfg.select("meta.bottom") != cmd.target)
        throw EditError("GARMENT_ABSENT", "the design has no " + cmd.target + " (meta.bottom is " +
                                              cfg.select("meta.bottom") + ")");
      a["meta.bottom"] = *cmd.value;
      break;
    case EditVerb::remove: {
      if (is_bottom(cmd.target) && cfg.select("meta.bottom") != cmd.target)
        throw EditError("GARMENT_ABSENT", "the design has no " + cmd.target);
      bool changed = false;
      for (const std::string& path : targets) {
        const ParamSpec& spec = spec_of(schema, path);
        const design::Value off =
            spec.kind == ParamKind::boolean ? design::Value{false} : design::Value{std::string("none")};
        changed = changed || a[path] != off;
        a[path] = off;
      }
      if (!changed) out.notices.push_back(cmd.target + " is already absent");
      break;
    }
    case EditVerb::shorten:
    case EditVerb::lengthen:
      for (const std::string& path : targets) {
        if (!move_bucket(out.config, spec_of(schema, path), cmd.verb == EditVerb::lengthen ? 1 : -1))
          out.notices.push_back(path + " is already at its " +
                                (cmd.verb == EditVerb::lengthen ? "longest" : "shortest") + " bucket");
      }
      break;
  }
  return out;
}

Tightness tightness_from_string(std::string_view s) {
  const std::string l = lower(s);
  if (l == "tight") return Tightness::tight;
  if (l == "ok") return Tightness::ok;
  if (l == "loose") return Tightness::loose;
  throw EditError("UNKNOWN_TIGHTNESS", "tightness must be tight, ok or loose, got '" + std::string(s) + "'");
}

std::vector<std::string> region_params(const std::string& region, const DesignConfiguration& cfg) {
  if (region == "cuff") {
    if (cfg.boolean("sleeve.asymmetric")) return {"cuff.ease", "cuff_left.ease"};
    return {"cuff.ease"};
  }
  if (region == "upper_bodice") return {"bodice.ease"};
  if (region == "lower_bodice") return {"bodice.waist_ease"};
  if (region == "collar") return {"neckline.width"};
  throw EditError("UNKNOWN_REGION", "pressure region must be cuff, upper_bodice, lower_bodice or collar, got '" +
                                        region + "'");
}

EditOutcome apply_pressure_feedback(const DesignConfiguration& cfg, const std::vector<PressureReading>& report,
                                    const DesignSchema& schema) {
  require_valid(cfg, schema);
  EditOutcome out{cfg, {}};
  for (const PressureReading& r : report) {
    const auto params = region_params(r.region, cfg);
    if (r.tightness == Tightness::ok) continue;
    const int dir = r.tightness == Tightness::tight ? 1 : -1;
    for (const std::string& path : params) {
      if (!move_bucket(out.config, spec_of(schema, path), dir))
        out.notices.push_back(path + " is already at its " + (dir > 0 ? "loosest" : "tightest") + " bucket");
    }
  }
  return out;
}

}  // namespace gdsl::agents
