#pragma once

#include <map>
#include <mutex>
#include <set>
#include <string>
#include <vector>

#include "gdsl/agents/prompt.hpp"

namespace gdsl::agents {

struct DesignInput {
  enum class Kind { text, image_file, sketch_file };
  Kind kind = Kind::text;
  std::string payload;  // the text itself, or a file path

  static DesignInput text(std::string t) { return {Kind::text, std::move(t)}; }
  static DesignInput image(std::string path) { return {Kind::image_file, std::move(path)}; }
  static DesignInput sketch(std::string path) { return {Kind::sketch_file, std::move(path)}; }

  friend bool operator==(const DesignInput&, const DesignInput&) = default;
};

std::string_view to_string(DesignInput::Kind k);  // "text" | "image" | "sketch"
// Throws InputError for unknown names.
DesignInput::Kind input_kind_from_string(std::string_view name);

// Throws InputError (FILE_UNREADABLE) when a file input cannot be read.
void check_input(const DesignInput& input);
// File contents for file inputs; throws InputError.
std::string read_input_file(const DesignInput& input);

// The design-understanding agent. Implementations must be safe to call from
// several sessions at once.
class DesignAgent {
 public:
  virtual ~DesignAgent() = default;

  // One question round. Answers for questions not asked are ignored by the
  // caller. Throws AgentError on transport failure.
  virtual std::vector<Answer> answer(const Prompt& prompt, const DesignInput& input) = 0;

  // Free-text edit suggestions for the comparison query, one per line.
  virtual std::string compare(const std::string& query, const DesignInput& input) = 0;
};

// Deterministic table-driven agent. Round r answers each asked question from
// the table unless the path is withheld for that round.
class MockAgent : public DesignAgent {
 public:
  explicit MockAgent(std::map<std::string, std::string> table, std::string comparison_reply = {});

  // Leave `paths` unanswered in round `round` (0-based); round kAlways
  // applies to every round.
  static constexpr std::size_t kAlways = static_cast<std::size_t>(-1);
  MockAgent& withhold(std::size_t round, std::set<std::string> paths);
  // Replace the label sent for `path` in round `round`.
  MockAgent& garble(std::size_t round, const std::string& path, std::string label);

  std::vector<Answer> answer(const Prompt& prompt, const DesignInput& input) override;
  std::string compare(const std::string& query, const DesignInput& input) override;

  std::size_t rounds() const;
  std::vector<Prompt> received() const;
  std::vector<std::string> comparison_queries() const;

 private:
  mutable std::mutex mu_;
  std::map<std::string, std::string> table_;
  std::string comparison_reply_;
  std::map<std::size_t, std::set<std::string>> withheld_;
  std::map<std::pair<std::size_t, std::string>, std::string> garbled_;
  std::vector<Prompt> received_;
  std::vector<std::string> queries_;
};

// Answer table of the schema defaults.
std::map<std::string, std::string> default_answer_table(const DesignSchema& schema);

// Default table adjusted by keywords found in a text description ("skirt",
// "sleeveless", "long sleeves", "mandarin collar", "v-neck", ...). File inputs
// get the plain default table.
std::map<std::string, std::string> keyword_answer_table(const DesignInput& input, const DesignSchema& schema);

}  // namespace gdsl::agents
