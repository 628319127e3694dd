// gdsl: command-line front end to the drafting engine.
// Exit status: 0 success, 1 the input was rejected, 2 usage error.

#include <atomic>
#include <csignal>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "gdsl/agents/prompt.hpp"
#include "gdsl/agents/session.hpp"
#include "gdsl/design/config.hpp"
#include "gdsl/design/quantize.hpp"
#include "gdsl/garment/assemble.hpp"
#include "gdsl/pattern/serialize.hpp"
#include "gdsl/pattern/stats.hpp"
#include "gdsl/pattern/svg.hpp"
#include "gdsl/pattern/validate.hpp"
#include "gdsl/service/http.hpp"
#include "httplib.h"

namespace {

using gdsl::detail::Json;
namespace design = gdsl::design;
namespace pattern = gdsl::pattern;

constexpr int kRejected = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::stringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out.flush()) throw UsageError("cannot write " + path);
}

const design::DesignSchema& schema() { return design::default_schema(); }

gdsl::garment::BodyMeasurements load_body(const std::string& path) {
  if (path.empty()) return gdsl::garment::standard_body();
  return gdsl::garment::read_body(slurp(path));
}

void print_config_violations(const std::vector<design::ConfigViolation>& v) {
  for (const auto& x : v) std::cout << to_string(x.reason) << ' ' << x.path << ": " << x.message << '\n';
}

void print_report(const pattern::ValidityReport& r) {
  for (const auto& v : r.violations) std::cout << v.code << ' ' << v.subject << ": " << v.message << '\n';
}

int cmd_compile(const std::string& config, const std::string& svg, const std::string& out_pattern,
                const std::string& body) {
  const auto cfg = design::read_config(slurp(config), schema());
  if (auto v = design::validate_config(cfg, schema()); !v.empty()) {
    print_config_violations(v);
    return kRejected;
  }
  const auto p = gdsl::garment::assemble(cfg, load_body(body));
  if (!svg.empty()) spit(svg, pattern::export_svg(p));
  if (!out_pattern.empty()) spit(out_pattern, pattern::serialize_pattern(p));
  if (svg.empty() && out_pattern.empty()) std::cout << pattern::serialize_pattern(p);
  return 0;
}

int cmd_validate(const std::string& file, const std::string& body) {
  const std::string text = slurp(file);
  const Json doc = gdsl::detail::parse_document(text);
  if (doc.is_object() && doc.contains("design")) {
    const auto cfg = design::read_config(text, schema());
    if (auto v = design::validate_config(cfg, schema()); !v.empty()) {
      print_config_violations(v);
      return kRejected;
    }
    const auto report = pattern::validate_pattern(gdsl::garment::assemble(cfg, load_body(body)));
    print_report(report);
    if (!report.passed) return kRejected;
  } else {
    const auto report = pattern::validate_pattern(pattern::deserialize_pattern(text));
    print_report(report);
    if (!report.passed) return kRejected;
  }
  std::cout << "valid\n";
  return 0;
}

int cmd_tokenize(const std::string& config) {
  const auto tokens = design::quantize(design::read_config(slurp(config), schema()), schema());
  for (std::size_t i = 0; i < tokens.tokens.size(); ++i) std::cout << (i ? " " : "") << tokens.tokens[i];
  std::cout << '\n';
  return 0;
}

int cmd_detokenize(const std::string& file) {
  std::istringstream in(slurp(file));
  design::TokenSequence seq;
  std::string word;
  while (in >> word) {
    std::size_t used = 0;
    long long t = 0;
    try {
      t = std::stoll(word, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != word.size()) throw gdsl::TokenDomainError("NOT_AN_INTEGER", "token '" + word + "' is not an integer");
    seq.tokens.push_back(t);
  }
  std::cout << design::write_config(design::dequantize(seq, schema()), schema());
  return 0;
}

Json moments_json(const pattern::Moments& m) { return {{"mean", m.mean}, {"stddev", m.stddev}}; }

int cmd_stats(const std::vector<std::string>& files, bool json) {
  std::vector<pattern::DiversityStats> all;
  Json per = Json::array();
  for (const auto& f : files) {
    const auto s = pattern::pattern_stats(pattern::deserialize_pattern(slurp(f)));
    all.push_back(s);
    per.push_back({{"file", f},
                   {"num_panels", s.num_panels},
                   {"mean_edges_per_panel", s.mean_edges_per_panel},
                   {"num_stitches", s.num_stitches}});
  }
  const auto agg = pattern::aggregate_stats(all);
  if (json) {
    std::cout << Json{{"patterns", per},
                      {"aggregate",
                       {{"count", agg.patterns},
                        {"num_panels", moments_json(agg.panels)},
                        {"mean_edges_per_panel", moments_json(agg.edges_per_panel)},
                        {"num_stitches", moments_json(agg.stitches)}}}}
                     .dump(2)
              << '\n';
    return 0;
  }
  for (const auto& p : per)
    std::cout << p["file"].get<std::string>() << ": panels " << p["num_panels"] << ", edges/panel "
              << gdsl::detail::format_fixed(p["mean_edges_per_panel"].get<double>(), 3) << ", stitches "
              << p["num_stitches"] << '\n';
  auto line = [](const char* name, const pattern::Moments& m) {
    std::cout << name << ": mean " << gdsl::detail::format_fixed(m.mean, 3) << ", stddev "
              << gdsl::detail::format_fixed(m.stddev, 3) << '\n';
  };
  std::cout << "over " << agg.patterns << " pattern(s)\n";
  line("panels", agg.panels);
  line("edges/panel", agg.edges_per_panel);
  line("stitches", agg.stitches);
  return 0;
}

int cmd_prompt(bool json) {
  const auto p = gdsl::agents::synthesize_prompt(schema());
  if (!json) {
    std::cout << gdsl::agents::render_prompt(p);
    return 0;
  }
  Json qs = Json::array();
  for (const auto& q : p.questions) qs.push_back({{"path", q.param_path}, {"text", q.text}, {"choices", q.choices}});
  std::cout << Json{{"preamble", p.preamble}, {"questions", qs}}.dump(2) << '\n';
  return 0;
}

struct SessionArgs {
  std::string input;
  std::string kind = "text";
  std::string agent = "mock";
  std::string svg, pattern, transcript;
};

int cmd_session(const SessionArgs& a, const std::string& body) {
  const gdsl::agents::DesignInput input{gdsl::agents::input_kind_from_string(a.kind), a.input};
  auto agent = gdsl::service::default_agent_factory()(a.agent, input);
  gdsl::agents::GenerationSession s;
  try {
    s = gdsl::agents::run_generation_session(input, *agent, schema(), load_body(body));
  } catch (const gdsl::agents::GenerationError& e) {
    if (!a.transcript.empty()) spit(a.transcript, gdsl::agents::transcript_to_json(e.transcript()).dump(2) + "\n");
    throw;
  }
  for (const auto& note : s.transcript.notes) std::cerr << "note: " << note << '\n';
  std::cerr << s.transcript.rounds.size() << " question round(s), " << s.transcript.defaulted.size()
            << " defaulted\n";
  if (!a.svg.empty()) spit(a.svg, pattern::export_svg(s.pattern));
  if (!a.pattern.empty()) spit(a.pattern, pattern::serialize_pattern(s.pattern));
  if (!a.transcript.empty()) spit(a.transcript, gdsl::agents::transcript_to_json(s.transcript).dump(2) + "\n");
  std::cout << design::write_config(s.config, schema());
  return 0;
}

httplib::Server* g_server = nullptr;

int cmd_serve(const std::string& host, int port, std::string data_dir, const std::string& body) {
  if (data_dir.empty())
    if (const char* env = std::getenv("GDSL_DATA_DIR")) data_dir = env;
  if (data_dir.empty()) std::cerr << "GDSL_DATA_DIR is not set; sessions are kept in memory only\n";
  gdsl::service::SessionStore store(data_dir, schema(), load_body(body));
  httplib::Server server;
  gdsl::service::install_routes(server, store, gdsl::service::default_agent_factory());
  g_server = &server;
  std::signal(SIGINT, [](int) { g_server->stop(); });
  std::signal(SIGTERM, [](int) { g_server->stop(); });
  if (port == 0) {
    port = server.bind_to_any_port(host);
  } else if (!server.bind_to_port(host, port)) {
    port = -1;
  }
  if (port < 0) {
    std::cerr << "cannot listen on " << host << '\n';
    return kUsage;
  }
  std::cerr << "listening on http://" << host << ':' << port << " (" << store.ids().size() << " session(s) loaded)\n";
  std::cout << port << std::endl;
  server.listen_after_bind();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parametric sewing pattern compiler"};
  app.require_subcommand(1);
  std::string body;
  app.add_option("--body", body, "Body measurements document (default: the standard body)");

  std::string file, svg, out_pattern;
  auto* compile = app.add_subcommand("compile", "Assemble a configuration into a pattern");
  compile->add_option("config", file, "Configuration document")->required();
  compile->add_option("--svg", svg, "Write the SVG layout here");
  compile->add_option("--pattern", out_pattern, "Write the pattern document here");

  auto* validate = app.add_subcommand("validate", "Check a configuration or pattern document");
  validate->add_option("file", file, "Configuration or pattern document")->required();

  auto* tokenize = app.add_subcommand("tokenize", "Print the token sequence of a configuration");
  tokenize->add_option("config", file, "Configuration document")->required();

  auto* detokenize = app.add_subcommand("detokenize", "Configuration from a whitespace-separated token file");
  detokenize->add_option("tokens", file, "Token file, or - for standard input")->required();

  std::vector<std::string> files;
  bool json = false;
  auto* stats = app.add_subcommand("stats", "Panel, edge and stitch counts of patterns");
  stats->add_option("patterns", files, "Pattern documents")->required();
  stats->add_flag("--json", json, "Machine-readable output");

  auto* prompt = app.add_subcommand("prompt", "Print the synthesized question set");
  prompt->add_flag("--json", json, "Machine-readable output");

  SessionArgs sa;
  auto* session = app.add_subcommand("session", "Run a generation session and print the configuration");
  session->add_option("input", sa.input, "Design text, or a file path for image/sketch inputs")->required();
  session->add_option("--kind", sa.kind, "text | image | sketch")->check(CLI::IsMember({"text", "image", "sketch"}));
  session->add_option("--agent", sa.agent, "mock | remote")->check(CLI::IsMember({"mock", "remote"}));
  session->add_option("--svg", sa.svg, "Write the SVG layout here");
  session->add_option("--pattern", sa.pattern, "Write the pattern document here");
  session->add_option("--transcript", sa.transcript, "Write the transcript here");

  std::string host = "127.0.0.1", data_dir;
  int port = 8080;
  auto* serve = app.add_subcommand("serve", "Run the HTTP API");
  serve->add_option("--port", port, "TCP port; 0 picks a free one")->check(CLI::Range(0, 65535));
  serve->add_option("--host", host, "Address to bind");
  serve->add_option("--data-dir", data_dir, "Session directory (default: $GDSL_DATA_DIR)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (*compile) return cmd_compile(file, svg, out_pattern, body);
    if (*validate) return cmd_validate(file, body);
    if (*tokenize) return cmd_tokenize(file);
    if (*detokenize) return cmd_detokenize(file);
    if (*stats) return cmd_stats(files, json);
    if (*prompt) return cmd_prompt(json);
    if (*session) return cmd_session(sa, body);
    if (*serve) return cmd_serve(host, port, data_dir, body);
  } catch (const UsageError& e) {
    std::cerr << "gdsl: " << e.what() << '\n';
    return kUsage;
  } catch (const gdsl::Error& e) {
    std::cerr << "gdsl: " << e.code() << ": " << e.what() << '\n';
    return kRejected;
  } catch (const std::exception& e) {
    std::cerr << "gdsl: " << e.what() << '\n';
    return kRejected;
  }
  return kUsage;
}
