#pragma once

#include <string>
#include <vector>

#include "gdsl/agents/agent.hpp"
#include "gdsl/agents/edit.hpp"
#include "gdsl/detail/json_doc.hpp"
#include "gdsl/error.hpp"
#include "gdsl/garment/body.hpp"
#include "gdsl/pattern/pattern.hpp"

namespace gdsl::agents {

// Question rounds per session: the first ask plus two re-asks.
inline constexpr std::size_t kMaxQuestionRounds = 3;

struct TranscriptRound {
  std::vector<std::string> asked;  // paths, schema order
  std::vector<Answer> received;    // answers to asked questions, as sent
  std::vector<std::string> missing;
  std::vector<Answer> invalid;

  friend bool operator==(const TranscriptRound&, const TranscriptRound&) = default;
};

struct Transcript {
  std::vector<TranscriptRound> rounds;
  std::vector<std::string> defaulted;  // paths that fell back to the schema default
  std::vector<std::string> notes;

  friend bool operator==(const Transcript&, const Transcript&) = default;
};

detail::Json transcript_to_json(const Transcript& t);
// Throws ParseError with field paths below `path`.
Transcript transcript_from_json(const detail::Json& doc, const std::string& path = "");

struct GenerationSession {
  DesignInput input;
  design::DesignConfiguration config;
  pattern::Pattern pattern;
  Transcript transcript;
};

// A failure after the agent was consulted. code() is the underlying error's
// code; the transcript so far is attached.
class GenerationError : public Error {
 public:
  GenerationError(std::string code, const std::string& message, Transcript t)
      : Error(std::move(code), message), transcript_(std::move(t)) {}
  const Transcript& transcript() const noexcept { return transcript_; }

 private:
  Transcript transcript_;
};

// Ask, validate, re-ask only missing or invalid questions (at most
// kMaxQuestionRounds rounds), default and flag what is still unanswered,
// project, assemble. Throws InputError for unreadable input, AgentError from
// the agent, GenerationError when projection or assembly fails.
GenerationSession run_generation_session(const DesignInput& input, DesignAgent& agent,
                                         const design::DesignSchema& schema, const garment::BodyMeasurements& body);

// Comparison query for a session: the shipped comparison instructions
// followed by the current design's answer table.
std::string comparison_query(const design::DesignConfiguration& cfg, const design::DesignSchema& schema);

// Asks the agent for edit suggestions and parses them. Unparseable lines are
// dropped with a note appended to the session transcript.
std::vector<EditCommand> refinement_round(GenerationSession& session, DesignAgent& agent,
                                          const design::DesignSchema& schema);

}  // namespace gdsl::agents
