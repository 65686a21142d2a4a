#pragma once

#include "chromachain/color/rgb.hpp"
#include "chromachain/color/scheme.hpp"
#include "chromachain/knowledge/rules.hpp"
#include "chromachain/stage.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace chromachain::knowledge {

struct KnowledgeBlock {
  std::string id;
  std::string body;
  std::vector<Stage> applies_to;

  friend bool operator==(const KnowledgeBlock&, const KnowledgeBlock&) = default;
};

struct FewShotExample {
  std::string id;
  nlohmann::json input;
  nlohmann::json output;  // normalized stage output

  friend bool operator==(const FewShotExample&, const FewShotExample&) = default;
};

inline constexpr std::size_t kMinExamples = 3;
inline constexpr std::size_t kMaxExamples = 5;

struct FewShotBank {
  Stage stage = Stage::kIdeaPrompting;
  std::vector<FewShotExample> examples;

  /// Coloring examples are scene-specific; other stages ignore `scene_id`.
  [[nodiscard]] std::vector<const FewShotExample*> select(const std::optional<std::string>& scene_id) const;

  friend bool operator==(const FewShotBank&, const FewShotBank&) = default;
};

struct KnowledgeBase {
  CompositionRules rules;
  color::MoodThresholds mood_thresholds;
  color::DisplayAnchors display_anchors;
  std::vector<KnowledgeBlock> blocks;
  std::map<Stage, FewShotBank> few_shot;

  [[nodiscard]] const KnowledgeBlock* block(std::string_view id) const;
  [[nodiscard]] std::vector<const KnowledgeBlock*> blocks_for(Stage s) const;
  /// Empty bank when the stage has none.
  [[nodiscard]] const FewShotBank& bank(Stage s) const;

  friend bool operator==(const KnowledgeBase&, const KnowledgeBase&) = default;
};

/// Throws SchemaViolation (field path in the message) or ExampleParseFailure
/// (names the example). Absent numeric sections take defaults.
KnowledgeBase knowledge_from_json(const nlohmann::json& j);
nlohmann::json knowledge_to_json(const KnowledgeBase& kb);
KnowledgeBase load_knowledge(const std::filesystem::path& path);

}  // namespace chromachain::knowledge
