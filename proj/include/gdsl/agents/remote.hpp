#pragma once

#include <chrono>
#include <string>

#include "gdsl/agents/agent.hpp"

namespace gdsl::agents {

struct RemoteAgentOptions {
  std::string base_url;  // scheme://host[:port][/prefix]
  std::string token;     // bearer token, optional
  std::string model = "gdsl-design-agent";
  std::chrono::seconds timeout{60};
  int retries = 2;  // extra attempts after a transport failure or 5xx
};

// Options from GDSL_AGENT_URL and GDSL_AGENT_TOKEN; throws AgentError
// (NOT_CONFIGURED) when the URL is unset.
RemoteAgentOptions remote_options_from_env();

// Chat-completion client: POST <base_url>/chat/completions with a system
// message (the preamble) and a user message holding the questions and, for
// file inputs, the file as a base64 data URL. The reply content is parsed as
// a "<path>: <label>" table.
class RemoteAgent : public DesignAgent {
 public:
  explicit RemoteAgent(RemoteAgentOptions options);

  std::vector<Answer> answer(const Prompt& prompt, const DesignInput& input) override;
  std::string compare(const std::string& query, const DesignInput& input) override;

  // Request body for one round; exposed for tests.
  std::string request_body(const std::string& system, const std::string& user, const DesignInput& input) const;

 private:
  std::string complete(const std::string& system, const std::string& user, const DesignInput& input);

  RemoteAgentOptions options_;
  std::string origin_;
  std::string prefix_;
};

}  // namespace gdsl::agents
