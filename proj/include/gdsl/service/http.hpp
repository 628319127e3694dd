#pragma once

#include <functional>
#include <memory>
#include <string>

#include "gdsl/agents/agent.hpp"
#include "gdsl/service/store.hpp"

namespace httplib {
class Server;
}

namespace gdsl::service {

// Builds the agent named in a /generate request ("mock" or "remote").
// Throws InputError for unknown names and AgentError when the agent cannot
// be configured.
using AgentFactory =
    std::function<std::unique_ptr<agents::DesignAgent>(const std::string& name, const agents::DesignInput& input)>;

// "mock": table-driven agent seeded from keywords in the input text.
// "remote": RemoteAgent configured from GDSL_AGENT_URL / GDSL_AGENT_TOKEN.
AgentFactory default_agent_factory();

// Registers the HTTP API on `server`:
//   GET   /schema
//   POST  /sessions                 {"config"?: {path: value}}
//   GET   /sessions/{id}
//   GET   /sessions/{id}/pattern.svg
//   PATCH /sessions/{id}/config     {path: value, ...}
//   POST  /sessions/{id}/edit       {"instruction": text}
//   POST  /sessions/{id}/pressure   {"report": [{"region", "tightness"}]}
//   POST  /generate                 {"input": {"kind", "payload"}, "agent"?: name}
// Error bodies are {"error": {"code", "message", ...}}.
void install_routes(httplib::Server& server, SessionStore& store, AgentFactory agents);

// Session view returned by the session endpoints.
detail::Json session_view(const Session& s, const design::DesignSchema& schema);

}  // namespace gdsl::service
