#pragma once

#include "chromachain/llm/gateway.hpp"
#include "chromachain/pipeline/resources.hpp"
#include "chromachain/pipeline/session.hpp"

#include <nlohmann/json.hpp>

#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace chromachain::pipeline {

struct PipelineOptions {
  int concept_count = 3;
  int scheme_count = 4;
  std::size_t token_budget = prompt::kDefaultTokenBudget;
};

struct ConceptEdits {
  std::vector<std::string> remove_themes;  // applied before additions
  std::vector<std::string> add_themes;
  std::optional<int> tones, distance, heaviness;
};

struct SchemeEdits {
  std::map<color::Role, color::NcsColor> colors;  // replaces the role color and clears its variations
  std::set<color::Role> unlock;                   // applied first
  std::set<color::Role> lock;                     // applied after direct edits
  std::optional<std::string> instruction;
};

struct ElementOverride {
  std::string element_id;
  color::NcsColor color;
  std::optional<color::Role> role;
};

/// Runs the three-stage chain against one session at a time. Every operation
/// either commits fully (artifacts plus one event) or leaves the session as it
/// was. Not thread-safe per session; callers serialize.
class Pipeline {
 public:
  Pipeline(const Resources& resources, llm::ChatBackend& backend, llm::BackendConfig cfg,
           PipelineOptions options = {});

  Session new_session(std::string id, std::uint64_t seed) const;

  std::vector<color::DesignConcepts> stage1_concepts(Session& s, const std::string& intent);
  color::DesignConcepts select_concepts(Session& s, std::size_t index);
  color::DesignConcepts customize_concepts(Session& s, const ConceptEdits& edits);

  std::vector<color::ColorScheme> stage2_schemes(Session& s);
  color::ColorScheme choose_scheme(Session& s, std::size_t index);
  color::ColorScheme customize_scheme(Session& s, const SchemeEdits& edits);

  scene::ColorAssignment stage3_assign(Session& s, const std::string& scene_id);
  scene::ColorAssignment refine_result(Session& s, const std::string& instruction);
  scene::ColorAssignment refine_result(Session& s, const ElementOverride& override_);
  /// Pins survive stage-3 reruns and refinements; the current assignment is
  /// recolored right away.
  scene::ColorAssignment pin_element(Session& s, const std::string& element_id, const color::NcsColor& c);
  void unpin_element(Session& s, const std::string& element_id);

  /// Dispatches a logged operation by name; the result is the op's artifact.
  nlohmann::json apply(Session& s, const std::string& op, const nlohmann::json& payload);

  /// Fresh session with the same id and seed, rebuilt by re-running the log.
  Session replay(const Session& s);

  /// Scheme + assignment + stats + reasoning + reports for the current result.
  nlohmann::json export_bundle(const Session& s) const;
  scene::SchemeStats stats(const Session& s) const;

  [[nodiscard]] const Resources& resources() const { return resources_; }
  [[nodiscard]] const llm::BackendConfig& config() const { return cfg_; }

 private:
  nlohmann::json dispatch(Session& s, const std::string& op, const nlohmann::json& payload);
  llm::CompletionResult call(const Session& s, Stage stage, const nlohmann::json& bindings,
                             const nlohmann::json& payload, int attempt) const;

  nlohmann::json do_stage1(Session& s, const nlohmann::json& p);
  nlohmann::json do_select_concepts(Session& s, const nlohmann::json& p);
  nlohmann::json do_customize_concepts(Session& s, const nlohmann::json& p);
  nlohmann::json do_stage2(Session& s, const nlohmann::json& p);
  nlohmann::json do_choose_scheme(Session& s, const nlohmann::json& p);
  nlohmann::json do_customize_scheme(Session& s, const nlohmann::json& p);
  nlohmann::json do_stage3(Session& s, const nlohmann::json& p);
  nlohmann::json do_refine(Session& s, const nlohmann::json& p);
  nlohmann::json do_pin(Session& s, const nlohmann::json& p);
  nlohmann::json do_unpin(Session& s, const nlohmann::json& p);

  const Resources& resources_;
  llm::ChatBackend& backend_;
  llm::BackendConfig cfg_;
  PipelineOptions options_;
};

/// Operation names as they appear in the event log.
namespace ops {
inline constexpr const char* kStage1 = "stage1_concepts";
inline constexpr const char* kSelectConcepts = "select_concepts";
inline constexpr const char* kCustomizeConcepts = "customize_concepts";
inline constexpr const char* kStage2 = "stage2_schemes";
inline constexpr const char* kChooseScheme = "choose_scheme";
inline constexpr const char* kCustomizeScheme = "customize_scheme";
inline constexpr const char* kStage3 = "stage3_assign";
inline constexpr const char* kRefine = "refine_result";
inline constexpr const char* kPin = "pin_element";
inline constexpr const char* kUnpin = "unpin_element";
}  // namespace ops

void to_json(nlohmann::json& j, const ConceptEdits& e);
void from_json(const nlohmann::json& j, ConceptEdits& e);
void to_json(nlohmann::json& j, const SchemeEdits& e);
void from_json(const nlohmann::json& j, SchemeEdits& e);

}  // namespace chromachain::pipeline
