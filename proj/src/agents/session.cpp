#include "gdsl/agents/session.hpp"

#include <map>
#include <set>

#include "gdsl/garment/assemble.hpp"
#include "gdsl/resources.hpp"

namespace gdsl::agents {
namespace {

using detail::Json;

Json answers_json(const std::vector<Answer>& answers) {
  Json out = Json::array();
  for (const Answer& a : answers) out.push_back({{"path", a.param_path}, {"label", a.label}});
  return out;
}

std::vector<Answer> answers_from(const Json& arr, const std::string& path) {
  std::vector<Answer> out;
  const Json& a = detail::require_array(arr, path);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::string p = detail::child_path(path, i);
    const Json& item = detail::require_object(a[i], p);
    out.push_back({detail::require_string(detail::require_field(item, "path", p), p + "/path"),
                   detail::require_string(detail::require_field(item, "label", p), p + "/label")});
  }
  return out;
}

std::vector<std::string> strings_from(const Json& arr, const std::string& path) {
  std::vector<std::string> out;
  const Json& a = detail::require_array(arr, path);
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(detail::require_string(a[i], detail::child_path(path, i)));
  return out;
}

}  // namespace

Json transcript_to_json(const Transcript& t) {
  Json rounds = Json::array();
  for (const TranscriptRound& r : t.rounds) {
    rounds.push_back({{"asked", r.asked},
                      {"received", answers_json(r.received)},
                      {"missing", r.missing},
                      {"invalid", answers_json(r.invalid)}});
  }
  return {{"rounds", rounds}, {"defaulted", t.defaulted}, {"notes", t.notes}};
}

Transcript transcript_from_json(const Json& doc, const std::string& path) {
  Transcript t;
  detail::require_object(doc, path);
  const std::string rp = detail::child_path(path, "rounds");
  const Json& rounds = detail::require_array(detail::require_field(doc, "rounds", path), rp);
  for (std::size_t i = 0; i < rounds.size(); ++i) {
    const std::string p = detail::child_path(rp, i);
    const Json& r = detail::require_object(rounds[i], p);
    t.rounds.push_back({strings_from(detail::require_field(r, "asked", p), p + "/asked"),
                        answers_from(detail::require_field(r, "received", p), p + "/received"),
                        strings_from(detail::require_field(r, "missing", p), p + "/missing"),
                        answers_from(detail::require_field(r, "invalid", p), p + "/invalid")});
  }
  t.defaulted = strings_from(detail::require_field(doc, "defaulted", path), path + "/defaulted");
  t.notes = strings_from(detail::require_field(doc, "notes", path), path + "/notes");
  return t;
}

GenerationSession run_generation_session(const DesignInput& input, DesignAgent& agent,
                                         const design::DesignSchema& schema, const garment::BodyMeasurements& body) {
  check_input(input);
  const Prompt prompt = synthesize_prompt(schema);
  GenerationSession session{input, {}, {}, {}};
  Transcript& t = session.transcript;

  std::map<std::string, std::string> accepted;
  std::vector<std::string> asked;
  for (const auto& spec : schema.params()) asked.push_back(spec.path);

  for (std::size_t round = 0; round < kMaxQuestionRounds && !asked.empty(); ++round) {
    const std::vector<Answer> reply = agent.answer(subset(prompt, asked), input);
    const std::set<std::string> open(asked.begin(), asked.end());
    TranscriptRound r;
    r.asked = asked;
    std::set<std::string> answered;
    for (const Answer& a : reply) {
      if (!open.count(a.param_path)) continue;
      r.received.push_back(a);
      answered.insert(a.param_path);
      const auto* spec = schema.find(a.param_path);
      if (design::value_for_label(*spec, a.label))
        accepted[a.param_path] = a.label;
      else
        r.invalid.push_back(a);
    }
    for (const std::string& p : asked)
      if (!answered.count(p)) r.missing.push_back(p);
    std::vector<std::string> next;
    for (const std::string& p : asked)
      if (!accepted.count(p)) next.push_back(p);
    asked = std::move(next);
    t.rounds.push_back(std::move(r));
  }

  const design::DesignConfiguration defaults = schema.defaults();
  for (const std::string& p : asked) {
    accepted[p] = design::label_for_value(schema.at(p), defaults.at(p));
    t.defaulted.push_back(p);
    t.notes.push_back(p + " was not answered after " + std::to_string(t.rounds.size()) +
                      " rounds; using the schema default '" + accepted[p] + "'");
  }

  std::vector<Answer> answers;
  for (const auto& spec : schema.params()) answers.push_back({spec.path, accepted.at(spec.path)});
  try {
    session.config = design::project_answers(answers, schema);
    // A defaulted parameter keeps the exact default, not its bucket value.
    for (const std::string& p : t.defaulted) session.config.assignments[p] = defaults.at(p);
    session.pattern = garment::assemble(session.config, body);
  } catch (const AgentError&) {
    throw;
  } catch (const Error& e) {
    t.notes.push_back(std::string("generation failed: ") + e.what());
    throw GenerationError(e.code(), e.what(), t);
  }
  return session;
}

std::string comparison_query(const design::DesignConfiguration& cfg, const design::DesignSchema& schema) {
  std::string q(resources::comparison_prompt_txt);
  if (!q.empty() && q.back() != '\n') q += '\n';
  return q + "\nCurrent design:\n" + format_answer_table(describe(cfg, schema));
}

std::vector<EditCommand> refinement_round(GenerationSession& session, DesignAgent& agent,
                                          const design::DesignSchema& schema) {
  const std::string reply = agent.compare(comparison_query(session.config, schema), session.input);
  std::vector<EditCommand> out;
  std::size_t pos = 0;
  while (pos < reply.size()) {
    auto nl = reply.find('\n', pos);
    if (nl == std::string::npos) nl = reply.size();
    std::string line = reply.substr(pos, nl - pos);
    pos = nl + 1;
    const auto b = line.find_first_not_of(" \t\r-*");
    if (b == std::string::npos) continue;
    line = line.substr(b, line.find_last_not_of(" \t\r") - b + 1);
    try {
      out.push_back(parse_edit_instruction(line));
    } catch (const EditSyntaxError& e) {
      session.transcript.notes.push_back("dropped suggestion '" + line + "': " + e.what());
    }
  }
  return out;
}

}  // namespace gdsl::agents
