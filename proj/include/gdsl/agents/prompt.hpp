#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gdsl/design/project.hpp"
#include "gdsl/design/schema.hpp"

namespace gdsl::agents {

using design::Answer;
using design::DesignSchema;

struct Question {
  std::string param_path;
  std::string text;
  std::vector<std::string> choices;  // at least two

  friend bool operator==(const Question&, const Question&) = default;
};

struct Prompt {
  std::string preamble;
  std::vector<Question> questions;  // schema order

  friend bool operator==(const Prompt&, const Prompt&) = default;
};

// One multiple-choice question per parameter, worded from the shipped
// templates. Throws SchemaError when a parameter offers fewer than two choices.
Prompt synthesize_prompt(const DesignSchema& schema);

// The questions for `paths` only, in prompt order.
Prompt subset(const Prompt& prompt, const std::vector<std::string>& paths);

// Text sent to a remote agent: preamble, then one block per question:
//   [path] question text
//   choices: a | b | c
std::string render_prompt(const Prompt& prompt);

struct AnswerCheck {
  std::vector<std::string> missing;  // schema order
  std::vector<Answer> invalid;       // in answer order

  bool ok() const { return missing.empty() && invalid.empty(); }
  friend bool operator==(const AnswerCheck&, const AnswerCheck&) = default;
};

// `missing`: schema paths without any answer. `invalid`: answers for unknown
// paths or with a label outside the question's choices.
AnswerCheck validate_answers(const std::vector<Answer>& answers, const DesignSchema& schema);

// "<path>: <label>" lines; blank lines and lines without a colon are skipped,
// surrounding whitespace and backticks are trimmed.
std::vector<Answer> parse_answer_table(std::string_view text);
std::string format_answer_table(const std::vector<Answer>& answers);

// The descriptive answer table of a configuration, in schema order.
std::vector<Answer> describe(const design::DesignConfiguration& cfg, const DesignSchema& schema);

}  // namespace gdsl::agents
