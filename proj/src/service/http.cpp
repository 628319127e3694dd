#include "gdsl/service/http.hpp"

#include "gdsl/agents/edit.hpp"
#include "gdsl/agents/remote.hpp"
#include "gdsl/agents/session.hpp"
#include "gdsl/pattern/stats.hpp"
#include "gdsl/pattern/svg.hpp"
#include "gdsl/pattern/validate.hpp"
#include "gdsl/resources.hpp"
#include "httplib.h"

namespace gdsl::service {
namespace {

using detail::Json;
using httplib::Request;
using httplib::Response;

constexpr const char* kJson = "application/json";

void reply(Response& res, int status, const Json& body) {
  res.status = status;
  res.set_content(body.dump(2) + "\n", kJson);
}

Json error_body(const std::string& code, const std::string& message) {
  return {{"error", {{"code", code}, {"message", message}}}};
}

Json violations_json(const std::vector<design::ConfigViolation>& v) {
  Json out = Json::array();
  for (const auto& x : v)
    out.push_back({{"path", x.path}, {"reason", std::string(to_string(x.reason))}, {"message", x.message}});
  return out;
}

Json design_json(const design::DesignConfiguration& cfg, const design::DesignSchema& schema) {
  return Json::parse(design::write_config(cfg, schema))["design"];
}

// Flat {path: value} object as configuration overrides, typed by the schema.
design::DesignConfiguration overrides(const Json& obj, const design::DesignSchema& schema) {
  detail::require_object(obj, "");
  return design::read_config(Json{{"design", obj}}.dump(), schema);
}

Json command_json(const agents::EditCommand& c) {
  Json out = {{"verb", std::string(to_string(c.verb))}, {"target", c.target}};
  out["value"] = c.value ? Json(*c.value) : Json(nullptr);
  out["text"] = agents::pretty(c);
  return out;
}

Json request_json(const Request& req) {
  if (req.body.empty()) return Json::object();
  return detail::parse_document(req.body);
}

// Maps engine errors onto statuses; everything else is a 500.
template <typename Fn>
void guarded(Response& res, Fn&& fn) {
  try {
    fn();
  } catch (const SessionNotFound& e) {
    reply(res, 404, error_body(e.code(), e.what()));
  } catch (const ConfigRejected& e) {
    Json body = error_body(e.code(), e.what());
    body["error"]["violations"] = violations_json(e.violations());
    reply(res, 422, body);
  } catch (const agents::EditSyntaxError& e) {
    Json body = error_body(e.code(), e.what());
    body["error"]["remainder"] = e.remainder();
    reply(res, 422, body);
  } catch (const agents::GenerationError& e) {
    Json body = error_body(e.code(), e.what());
    body["error"]["transcript"] = agents::transcript_to_json(e.transcript());
    reply(res, 422, body);
  } catch (const AgentError& e) {
    reply(res, 502, error_body(e.code(), e.what()));
  } catch (const ParseError& e) {
    Json body = error_body(e.code(), e.what());
    if (!e.field().empty()) body["error"]["field"] = e.field();
    reply(res, e.line() != 0 ? 400 : 422, body);
  } catch (const Error& e) {
    reply(res, 422, error_body(e.code(), e.what()));
  } catch (const std::exception& e) {
    reply(res, 500, error_body("INTERNAL", e.what()));
  }
}

}  // namespace

AgentFactory default_agent_factory() {
  return [](const std::string& name, const agents::DesignInput& input) -> std::unique_ptr<agents::DesignAgent> {
    if (name == "mock")
      return std::make_unique<agents::MockAgent>(agents::keyword_answer_table(input, design::default_schema()));
    if (name == "remote") return std::make_unique<agents::RemoteAgent>(agents::remote_options_from_env());
    throw InputError("UNKNOWN_AGENT", "unknown agent '" + name + "' (expected mock or remote)");
  };
}

Json session_view(const Session& s, const design::DesignSchema& schema) {
  const auto stats = pattern::pattern_stats(s.pattern);
  const auto report = pattern::validate_pattern(s.pattern);
  Json violations = Json::array();
  for (const auto& v : report.violations)
    violations.push_back({{"code", v.code}, {"subject", v.subject}, {"message", v.message}});
  return {{"id", s.id},
          {"created", s.created},
          {"updated", s.updated},
          {"design", design_json(s.config, schema)},
          {"stats",
           {{"num_panels", stats.num_panels},
            {"mean_edges_per_panel", stats.mean_edges_per_panel},
            {"num_stitches", stats.num_stitches}}},
          {"validity", {{"passed", report.passed}, {"violations", violations}}},
          {"history", s.history}};
}

void install_routes(httplib::Server& server, SessionStore& store, AgentFactory agents) {
  const auto& schema = store.schema();

  server.Get("/schema", [](const Request&, Response& res) {
    res.set_content(std::string(resources::default_schema_json), kJson);
  });

  server.Post("/sessions", [&](const Request& req, Response& res) {
    guarded(res, [&] {
      const Json body = request_json(req);
      detail::require_object(body, "");
      auto cfg = schema.defaults();
      Json event = {{"kind", "create"}};
      if (auto it = body.find("config"); it != body.end()) {
        for (auto& [k, v] : overrides(*it, schema).assignments) cfg.assignments[k] = v;
        event["config"] = *it;
      }
      reply(res, 201, session_view(store.create(std::move(cfg), std::move(event)), schema));
    });
  });

  server.Get(R"(/sessions/([^/]+))", [&](const Request& req, Response& res) {
    guarded(res, [&] { reply(res, 200, session_view(store.get(req.matches[1]), schema)); });
  });

  server.Get(R"(/sessions/([^/]+)/pattern\.svg)", [&](const Request& req, Response& res) {
    guarded(res, [&] { res.set_content(pattern::export_svg(store.get(req.matches[1]).pattern), "image/svg+xml"); });
  });

  server.Patch(R"(/sessions/([^/]+)/config)", [&](const Request& req, Response& res) {
    guarded(res, [&] {
      const Json body = request_json(req);
      const auto patch = overrides(body, schema);
      const Session s = store.update(req.matches[1], [&](design::DesignConfiguration& cfg) {
        for (const auto& [k, v] : patch.assignments) cfg.assignments[k] = v;
        return Json{{"kind", "patch"}, {"changes", body}};
      });
      reply(res, 200, session_view(s, schema));
    });
  });

  server.Post(R"(/sessions/([^/]+)/edit)", [&](const Request& req, Response& res) {
    guarded(res, [&] {
      const Json body = request_json(req);
      detail::require_object(body, "");
      const std::string text =
          detail::require_string(detail::require_field(body, "instruction", ""), "/instruction");
      store.get(req.matches[1]);  // 404 before 422
      const agents::EditCommand cmd = agents::parse_edit_instruction(text);
      std::vector<std::string> notices;
      const Session s = store.update(req.matches[1], [&](design::DesignConfiguration& cfg) {
        auto out = agents::apply_edit(cfg, cmd, schema);
        cfg = std::move(out.config);
        notices = std::move(out.notices);
        return Json{{"kind", "edit"}, {"instruction", text}, {"command", command_json(cmd)}, {"notices", notices}};
      });
      reply(res, 200, {{"command", command_json(cmd)}, {"notices", notices}, {"session", session_view(s, schema)}});
    });
  });

  server.Post(R"(/sessions/([^/]+)/pressure)", [&](const Request& req, Response& res) {
    guarded(res, [&] {
      const Json body = request_json(req);
      detail::require_object(body, "");
      const Json& items = detail::require_array(detail::require_field(body, "report", ""), "/report");
      std::vector<agents::PressureReading> report;
      for (std::size_t i = 0; i < items.size(); ++i) {
        const std::string p = detail::child_path("/report", i);
        detail::require_object(items[i], p);
        report.push_back({detail::require_string(detail::require_field(items[i], "region", p), p + "/region"),
                          agents::tightness_from_string(detail::require_string(
                              detail::require_field(items[i], "tightness", p), p + "/tightness"))});
      }
      std::vector<std::string> notices;
      const Session s = store.update(req.matches[1], [&](design::DesignConfiguration& cfg) {
        auto out = agents::apply_pressure_feedback(cfg, report, schema);
        cfg = std::move(out.config);
        notices = std::move(out.notices);
        return Json{{"kind", "pressure"}, {"report", items}, {"notices", notices}};
      });
      reply(res, 200, {{"notices", notices}, {"session", session_view(s, schema)}});
    });
  });

  server.Post("/generate", [&, agents](const Request& req, Response& res) {
    guarded(res, [&] {
      const Json body = request_json(req);
      detail::require_object(body, "");
      const Json& in = detail::require_object(detail::require_field(body, "input", ""), "/input");
      const agents::DesignInput input{
          agents::input_kind_from_string(detail::require_string(detail::require_field(in, "kind", "/input"), "/input/kind")),
          detail::require_string(detail::require_field(in, "payload", "/input"), "/input/payload")};
      std::string name = "mock";
      if (auto it = body.find("agent"); it != body.end()) name = detail::require_string(*it, "/agent");
      auto agent = agents(name, input);
      const auto gen = agents::run_generation_session(input, *agent, schema, store.body());
      Json event = {{"kind", "generation"},
                    {"agent", name},
                    {"input", {{"kind", std::string(agents::to_string(input.kind))}, {"payload", input.payload}}},
                    {"transcript", agents::transcript_to_json(gen.transcript)}};
      reply(res, 201, session_view(store.create(gen.config, std::move(event)), schema));
    });
  });
}

}  // namespace gdsl::service
