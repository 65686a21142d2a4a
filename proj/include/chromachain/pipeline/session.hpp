#pragma once

#include "chromachain/color/scheme.hpp"
#include "chromachain/scene/scene.hpp"
#include "chromachain/validate/validators.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace chromachain::pipeline {

inline constexpr int kSessionSchemaVersion = 1;

struct Event {
  std::string timestamp;  // UTC, ISO 8601
  std::string op;
  nlohmann::json payload;

  friend bool operator==(const Event&, const Event&) = default;
};

/// A locked role keeps its color and variations across regenerations.
struct RoleLock {
  color::NcsColor color;
  std::vector<color::NcsColor> variations;

  friend bool operator==(const RoleLock&, const RoleLock&) = default;
};

struct Session {
  std::string id;
  std::uint64_t seed = 0;
  std::vector<std::string> intents;

  // stage 1
  std::vector<color::DesignConcepts> concept_candidates;
  std::optional<color::DesignConcepts> concepts;

  // stage 2
  std::vector<color::ColorScheme> scheme_candidates;
  std::vector<validate::ValidationReport> scheme_reports;
  std::optional<color::ColorScheme> scheme;
  validate::ValidationReport scheme_report;
  bool schemes_stale = false;

  // stage 3
  std::optional<std::string> scene_id;
  std::optional<scene::ColorAssignment> assignment;
  validate::ValidationReport assignment_report;
  bool assignment_stale = false;

  std::map<color::Role, RoleLock> locks;
  std::map<std::string, color::NcsColor> pins;

  std::vector<Event> events;

  friend bool operator==(const Session&, const Session&) = default;
};

/// Stage number (0..3) of the furthest artifact present.
int stage_reached(const Session& s);

nlohmann::json session_to_json(const Session& s);
/// Throws SchemaViolation, or VersionMismatch naming both versions.
Session session_from_json(const nlohmann::json& j);

void save_session(const Session& s, const std::filesystem::path& path);
Session load_session(const std::filesystem::path& path);

/// Artifacts only (no ids, timestamps or event log); used for replay checks.
nlohmann::json artifacts_json(const Session& s);

void to_json(nlohmann::json& j, const Event& e);
void from_json(const nlohmann::json& j, Event& e);

}  // namespace chromachain::pipeline
