#include "gdsl/service/store.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <random>
#include <sstream>

#include "gdsl/garment/assemble.hpp"

namespace gdsl::service {
namespace {

using detail::Json;

constexpr const char* kFormat = "gdsl-session";
constexpr int kVersion = 1;

std::string new_id() {
  static std::mutex mu;
  static std::mt19937_64 rng{std::random_device{}()};
  std::lock_guard lock(mu);
  static const char* hex = "0123456789abcdef";
  std::string id;
  std::uint64_t bits = rng();
  for (int i = 0; i < 16; ++i, bits >>= 4) id += hex[bits & 0xf];
  return id;
}

bool valid_id(const std::string& id) {
  if (id.empty() || id.size() > 64) return false;
  for (char c : id)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-' && c != '_') return false;
  return true;
}

std::string violation_summary(const std::vector<design::ConfigViolation>& v) {
  std::string out = std::to_string(v.size()) + " invalid parameter(s)";
  if (!v.empty()) out += ", first " + v.front().path + ": " + v.front().message;
  return out;
}

}  // namespace

ConfigRejected::ConfigRejected(std::vector<design::ConfigViolation> v)
    : ValidationFailed("INVALID_CONFIG", violation_summary(v)), violations_(std::move(v)) {}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

SessionStore::SessionStore(std::filesystem::path dir, const design::DesignSchema& schema,
                           garment::BodyMeasurements body)
    : dir_(std::move(dir)), schema_(schema), body_(std::move(body)) {
  garment::validate_body(body_);
  if (!dir_.empty()) {
    std::filesystem::create_directories(dir_);
    reload();
  }
}

pattern::Pattern SessionStore::compile(const design::DesignConfiguration& cfg) const {
  auto violations = design::validate_config(cfg, schema_);
  if (!violations.empty()) throw ConfigRejected(std::move(violations));
  return garment::assemble(cfg, body_);
}

std::string SessionStore::to_document(const Session& s, const design::DesignSchema& schema) {
  Json doc;
  doc["format"] = kFormat;
  doc["version"] = kVersion;
  doc["id"] = s.id;
  doc["created"] = s.created;
  doc["updated"] = s.updated;
  doc["schema_version"] = schema.version();
  doc["design"] = Json::parse(design::write_config(s.config, schema))["design"];
  doc["history"] = s.history;
  return doc.dump(2) + "\n";
}

void SessionStore::persist(const Session& s) const {
  if (dir_.empty()) return;
  const auto final_path = dir_ / (s.id + ".json");
  auto tmp = final_path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << to_document(s, schema_);
    out.flush();
    if (!out) throw Error("STORE_WRITE_FAILED", "cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, final_path);
}

std::shared_ptr<SessionStore::Slot> SessionStore::slot(const std::string& id) const {
  std::shared_lock lock(map_mu_);
  auto it = slots_.find(id);
  if (it == slots_.end()) throw SessionNotFound(id);
  return it->second;
}

Session SessionStore::create(design::DesignConfiguration cfg, Json event) {
  auto s = std::make_shared<Slot>();
  s->session.pattern = compile(cfg);
  s->session.config = std::move(cfg);
  s->session.created = s->session.updated = utc_timestamp();
  event["at"] = s->session.created;
  s->session.history.push_back(std::move(event));

  std::unique_lock lock(map_mu_);
  do s->session.id = new_id();
  while (slots_.count(s->session.id));
  persist(s->session);
  slots_[s->session.id] = s;
  return s->session;
}

Session SessionStore::get(const std::string& id) const {
  auto s = slot(id);
  std::lock_guard lock(s->mu);
  return s->session;
}

Session SessionStore::update(const std::string& id, const std::function<Json(design::DesignConfiguration&)>& fn) {
  auto s = slot(id);
  std::lock_guard lock(s->mu);
  Session next = s->session;
  Json event = fn(next.config);
  next.pattern = compile(next.config);
  next.updated = utc_timestamp();
  event["at"] = next.updated;
  next.history.push_back(std::move(event));
  persist(next);
  s->session = std::move(next);
  return s->session;
}

std::vector<std::string> SessionStore::ids() const {
  std::shared_lock lock(map_mu_);
  std::vector<std::string> out;
  for (const auto& [id, s] : slots_) out.push_back(id);
  return out;
}

void SessionStore::reload() {
  if (dir_.empty()) return;
  std::map<std::string, std::shared_ptr<Slot>> loaded;
  for (const auto& entry : std::filesystem::directory_iterator(dir_)) {
    if (entry.path().extension() != ".json") continue;
    const std::string file = entry.path().string();
    std::ifstream in(entry.path(), std::ios::binary);
    std::stringstream text;
    text << in.rdbuf();
    try {
      const Json doc = detail::parse_document(text.str());
      if (detail::require_string(detail::require_field(doc, "format", ""), "/format") != kFormat)
        throw ParseError("WRONG_FORMAT", "not a session document", "/format");
      auto s = std::make_shared<Slot>();
      Session& session = s->session;
      session.id = detail::require_string(detail::require_field(doc, "id", ""), "/id");
      if (!valid_id(session.id)) throw ParseError("INVARIANT_VIOLATION", "bad session id", "/id");
      session.created = detail::require_string(detail::require_field(doc, "created", ""), "/created");
      session.updated = detail::require_string(detail::require_field(doc, "updated", ""), "/updated");
      session.history = detail::require_array(detail::require_field(doc, "history", ""), "/history");
      Json cfg_doc = {{"design", detail::require_field(doc, "design", "")}};
      session.config = design::read_config(cfg_doc.dump(), schema_);
      session.pattern = compile(session.config);
      loaded[session.id] = std::move(s);
    } catch (const ParseError& e) {
      throw ParseError(e.code(), file + ": " + e.what(), e.field(), e.line(), e.column());
    } catch (const Error& e) {
      throw ParseError("INVARIANT_VIOLATION", file + ": stored configuration no longer compiles: " + e.what());
    }
  }
  std::unique_lock lock(map_mu_);
  slots_ = std::move(loaded);
}

}  // namespace gdsl::service
