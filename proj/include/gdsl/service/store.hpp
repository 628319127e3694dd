#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

#include "gdsl/design/config.hpp"
#include "gdsl/design/schema.hpp"
#include "gdsl/detail/json_doc.hpp"
#include "gdsl/error.hpp"
#include "gdsl/garment/body.hpp"
#include "gdsl/pattern/pattern.hpp"

namespace gdsl::service {

// Invariant: pattern == garment::assemble(config, store body).
struct Session {
  std::string id;
  design::DesignConfiguration config;
  pattern::Pattern pattern;
  detail::Json history = detail::Json::array();  // one object per event, oldest first
  std::string created;                            // ISO 8601 UTC
  std::string updated;
};

class SessionNotFound : public Error {
 public:
  explicit SessionNotFound(const std::string& id) : Error("SESSION_NOT_FOUND", "no session '" + id + "'") {}
};

// A configuration that failed validate_config.
class ConfigRejected : public ValidationFailed {
 public:
  explicit ConfigRejected(std::vector<design::ConfigViolation> v);
  const std::vector<design::ConfigViolation>& violations() const noexcept { return violations_; }

 private:
  std::vector<design::ConfigViolation> violations_;
};

// Sessions keyed by id, one JSON document per session under `dir` (written
// to a temporary file and renamed into place). An empty `dir` keeps sessions
// in memory. Mutations of one session are serialized; different sessions
// proceed independently.
class SessionStore {
 public:
  SessionStore(std::filesystem::path dir, const design::DesignSchema& schema, garment::BodyMeasurements body);

  // Validates and compiles `cfg`. Throws ConfigRejected, DraftError or
  // AssemblyError; nothing is stored then.
  Session create(design::DesignConfiguration cfg, detail::Json event);
  Session get(const std::string& id) const;

  // `fn` edits a copy of the configuration and returns the history event to
  // record. The result is validated, compiled and persisted before it
  // replaces the stored session; on any exception the session is unchanged.
  Session update(const std::string& id, const std::function<detail::Json(design::DesignConfiguration&)>& fn);

  std::vector<std::string> ids() const;

  // Reads every session document in the directory. Throws ParseError naming
  // the offending file.
  void reload();

  const design::DesignSchema& schema() const { return schema_; }
  const garment::BodyMeasurements& body() const { return body_; }

  // Session document text (the persisted form).
  static std::string to_document(const Session& s, const design::DesignSchema& schema);

 private:
  struct Slot {
    std::mutex mu;
    Session session;
  };

  pattern::Pattern compile(const design::DesignConfiguration& cfg) const;
  void persist(const Session& s) const;
  std::shared_ptr<Slot> slot(const std::string& id) const;

  std::filesystem::path dir_;
  const design::DesignSchema& schema_;
  garment::BodyMeasurements body_;
  mutable std::shared_mutex map_mu_;
  std::map<std::string, std::shared_ptr<Slot>> slots_;
};

// Current time as "YYYY-MM-DDTHH:MM:SSZ".
std::string utc_timestamp();

}  // namespace gdsl::service
