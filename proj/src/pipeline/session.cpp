#include "chromachain/pipeline/session.hpp"

#include "chromachain/error.hpp"

#include <fstream>

namespace chromachain::pipeline {

using nlohmann::json;

namespace {

template <typename T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <typename T>
std::optional<T> optional_from(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

}  // namespace

void to_json(json& j, const Event& e) { j = json{{"timestamp", e.timestamp}, {"op", e.op}, {"payload", e.payload}}; }

void from_json(const json& j, Event& e) {
  e.timestamp = j.at("timestamp").get<std::string>();
  e.op = j.at("op").get<std::string>();
  e.payload = j.value("payload", json::object());
}

int stage_reached(const Session& s) {
  if (s.assignment) return 3;
  if (s.scheme) return 2;
  if (s.concepts) return 1;
  return 0;
}

json session_to_json(const Session& s) {
  json locks = json::object();
  for (const auto& [role, lock] : s.locks) {
    locks[std::string(color::to_string(role))] = {{"color", lock.color}, {"variations", lock.variations}};
  }
  json pins = json::object();
  for (const auto& [id, c] : s.pins) pins[id] = c;
  return json{
      {"schema_version", kSessionSchemaVersion},
      {"id", s.id},
      {"seed", s.seed},
      {"intents", s.intents},
      {"concept_candidates", s.concept_candidates},
      {"concepts", optional_json(s.concepts)},
      {"scheme_candidates", s.scheme_candidates},
      {"scheme_reports", s.scheme_reports},
      {"scheme", optional_json(s.scheme)},
      {"scheme_report", s.scheme_report},
      {"schemes_stale", s.schemes_stale},
      {"scene_id", optional_json(s.scene_id)},
      {"assignment", optional_json(s.assignment)},
      {"assignment_report", s.assignment_report},
      {"assignment_stale", s.assignment_stale},
      {"locks", std::move(locks)},
      {"pins", std::move(pins)},
      {"events", s.events},
  };
}

Session session_from_json(const json& j) {
  if (!j.is_object() || !j.contains("schema_version") || !j.at("schema_version").is_number_integer()) {
    throw Error(ErrorCode::kSchemaViolation, "session: missing integer schema_version");
  }
  const int version = j.at("schema_version").get<int>();
  if (version != kSessionSchemaVersion) {
    throw Error(ErrorCode::kVersionMismatch,
                "session file has schema_version " + std::to_string(version) + ", this build reads " +
                    std::to_string(kSessionSchemaVersion),
                {{"found", version}, {"supported", kSessionSchemaVersion}});
  }
  try {
    Session s;
    s.id = j.at("id").get<std::string>();
    s.seed = j.value("seed", std::uint64_t{0});
    s.intents = j.value("intents", std::vector<std::string>{});
    s.concept_candidates = j.value("concept_candidates", std::vector<color::DesignConcepts>{});
    s.concepts = optional_from<color::DesignConcepts>(j, "concepts");
    s.scheme_candidates = j.value("scheme_candidates", std::vector<color::ColorScheme>{});
    if (j.contains("scheme_reports")) s.scheme_reports = j.at("scheme_reports").get<std::vector<validate::ValidationReport>>();
    s.scheme = optional_from<color::ColorScheme>(j, "scheme");
    if (j.contains("scheme_report")) s.scheme_report = j.at("scheme_report").get<validate::ValidationReport>();
    s.schemes_stale = j.value("schemes_stale", false);
    s.scene_id = optional_from<std::string>(j, "scene_id");
    s.assignment = optional_from<scene::ColorAssignment>(j, "assignment");
    if (j.contains("assignment_report")) {
      s.assignment_report = j.at("assignment_report").get<validate::ValidationReport>();
    }
    s.assignment_stale = j.value("assignment_stale", false);
    const auto locks = j.value("locks", json::object());
    for (const auto& [name, lock] : locks.items()) {
      const auto role = color::role_from_string(name);
      if (!role) throw Error(ErrorCode::kSchemaViolation, "session.locks: unknown role " + name);
      s.locks.insert_or_assign(*role, RoleLock{lock.at("color").get<color::NcsColor>(),
                                               lock.value("variations", std::vector<color::NcsColor>{})});
    }
    const auto pins = j.value("pins", json::object());
    for (const auto& [id, c] : pins.items()) s.pins.insert_or_assign(id, c.get<color::NcsColor>());
    s.events = j.value("events", std::vector<Event>{});
    if ((s.scheme && !s.concepts) || (s.assignment && (!s.scheme || !s.scene_id))) {
      throw Error(ErrorCode::kSchemaViolation, "session: stage artifact present without its predecessor");
    }
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kSchemaViolation, std::string("session: ") + e.what());
  }
}

void save_session(const Session& s, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write session file " + path.string());
  out << session_to_json(s).dump(2) << '\n';
  if (!out) throw Error(ErrorCode::kIo, "failed writing session file " + path.string());
}

Session load_session(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open session file " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kSchemaViolation, path.string() + ": " + e.what());
  }
  return session_from_json(j);
}

json artifacts_json(const Session& s) {
  auto j = session_to_json(s);
  j.erase("id");
  j.erase("events");
  j.erase("schema_version");
  return j;
}

}  // namespace chromachain::pipeline
