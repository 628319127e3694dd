#include "gdsl/agents/remote.hpp"

#include <cstdlib>

#include "gdsl/detail/json_doc.hpp"
#include "gdsl/error.hpp"
#include "httplib.h"

namespace gdsl::agents {
namespace {

std::string mime_type(const std::string& path) {
  const auto dot = path.rfind('.');
  const std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
  if (ext == "png") return "image/png";
  if (ext == "jpg" || ext == "jpeg") return "image/jpeg";
  if (ext == "gif") return "image/gif";
  if (ext == "webp") return "image/webp";
  if (ext == "svg") return "image/svg+xml";
  return "application/octet-stream";
}

}  // namespace

RemoteAgentOptions remote_options_from_env() {
  RemoteAgentOptions o;
  const char* url = std::getenv("GDSL_AGENT_URL");
  if (url == nullptr || *url == '\0') throw AgentError("NOT_CONFIGURED", "GDSL_AGENT_URL is not set");
  o.base_url = url;
  if (const char* token = std::getenv("GDSL_AGENT_TOKEN")) o.token = token;
  return o;
}

RemoteAgent::RemoteAgent(RemoteAgentOptions options) : options_(std::move(options)) {
  const auto scheme = options_.base_url.find("://");
  if (scheme == std::string::npos) throw AgentError("BAD_URL", "agent URL needs a scheme: " + options_.base_url);
  const auto path = options_.base_url.find('/', scheme + 3);
  origin_ = options_.base_url.substr(0, path);
  prefix_ = path == std::string::npos ? "" : options_.base_url.substr(path);
  while (!prefix_.empty() && prefix_.back() == '/') prefix_.pop_back();
#ifndef CPPHTTPLIB_OPENSSL_SUPPORT
  if (options_.base_url.rfind("https://", 0) == 0)
    throw AgentError("BAD_URL", "this build has no TLS support; use an http:// agent URL");
#endif
}

std::string RemoteAgent::request_body(const std::string& system, const std::string& user,
                                      const DesignInput& input) const {
  detail::Json content = detail::Json::array();
  std::string text = user;
  if (input.kind == DesignInput::Kind::text) text += "\n\nDesign input:\n" + input.payload;
  content.push_back({{"type", "text"}, {"text", text}});
  if (input.kind != DesignInput::Kind::text) {
    const std::string data = read_input_file(input);
    content.push_back({{"type", "image_url"},
                       {"image_url", {{"url", "data:" + mime_type(input.payload) + ";base64," +
                                                  httplib::detail::base64_encode(data)}}}});
  }
  detail::Json body = {{"model", options_.model},
                       {"temperature", 0},
                       {"messages", detail::Json::array({{{"role", "system"}, {"content", system}},
                                                         {{"role", "user"}, {"content", content}}})}};
  return body.dump();
}

std::string RemoteAgent::complete(const std::string& system, const std::string& user, const DesignInput& input) {
  const std::string body = request_body(system, user, input);
  httplib::Client client(origin_);
  const auto secs = static_cast<time_t>(options_.timeout.count());
  client.set_connection_timeout(secs, 0);
  client.set_read_timeout(secs, 0);
  client.set_write_timeout(secs, 0);
  if (!options_.token.empty()) client.set_bearer_token_auth(options_.token);

  std::string failure;
  for (int attempt = 0; attempt <= options_.retries; ++attempt) {
    auto res = client.Post(prefix_ + "/chat/completions", body, "application/json");
    if (!res) {
      failure = "transport error: " + httplib::to_string(res.error());
      continue;
    }
    if (res->status >= 500) {
      failure = "agent returned HTTP " + std::to_string(res->status);
      continue;
    }
    if (res->status != 200)
      throw AgentError("AGENT_REJECTED", "agent returned HTTP " + std::to_string(res->status) + ": " + res->body);
    try {
      const detail::Json doc = detail::parse_document(res->body);
      return doc.at("choices").at(0).at("message").at("content").get<std::string>();
    } catch (const std::exception& e) {
      throw AgentError("BAD_RESPONSE", std::string("agent reply is not a chat completion: ") + e.what());
    }
  }
  throw AgentError("TRANSPORT", failure + " after " + std::to_string(options_.retries + 1) + " attempts");
}

std::vector<Answer> RemoteAgent::answer(const Prompt& prompt, const DesignInput& input) {
  Prompt questions = prompt;
  questions.preamble.clear();
  return parse_answer_table(complete(prompt.preamble, render_prompt(questions), input));
}

std::string RemoteAgent::compare(const std::string& query, const DesignInput& input) {
  return complete("You compare garment designs.", query, input);
}

}  // namespace gdsl::agents
