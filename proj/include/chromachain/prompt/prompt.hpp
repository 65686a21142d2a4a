#pragma once

#include "chromachain/knowledge/knowledge.hpp"
#include "chromachain/stage.hpp"

#include <nlohmann/json.hpp>

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace chromachain::prompt {

inline constexpr std::size_t kDefaultTokenBudget = 4096;

// Section sentinels, always emitted in this order.
inline constexpr std::string_view kBackgroundSentinel = "### BACKGROUND & TASK";
inline constexpr std::string_view kKnowledgeSentinel = "### DOMAIN KNOWLEDGE";
inline constexpr std::string_view kFewShotSentinel = "### FEW-SHOT EXAMPLES";
inline constexpr std::string_view kInputSentinel = "### PREFIX & INPUT";
inline constexpr std::string_view kNoExamplesMarker = "(no examples)";

struct PromptTemplate {
  Stage stage = Stage::kIdeaPrompting;
  std::string background_task;          // may hold {{name}} placeholders
  std::vector<std::string> knowledge_block_ids;
  bool use_few_shot = false;
  std::string prefix;                   // may hold {{name}} placeholders
  std::vector<std::string> input_slots; // rendered verbatim after the prefix

  friend bool operator==(const PromptTemplate&, const PromptTemplate&) = default;
};

struct RenderedPrompt {
  Stage stage = Stage::kIdeaPrompting;
  std::string text;
  std::size_t token_estimate = 0;
};

/// ceil(bytes / 3).
std::size_t estimate_tokens(std::string_view text);

/// Throws MissingBinding (placeholder or slot absent from `bindings`) and
/// TokenBudgetExceeded (estimate in the details).
RenderedPrompt render_prompt(const PromptTemplate& t, const knowledge::KnowledgeBase& kb,
                             const nlohmann::json& bindings, std::size_t token_budget = kDefaultTokenBudget);

using TemplateSet = std::map<Stage, PromptTemplate>;

void to_json(nlohmann::json& j, const PromptTemplate& t);
/// Every stage must be present; block ids must exist in `kb`. Throws SchemaViolation.
TemplateSet templates_from_json(const nlohmann::json& j, const knowledge::KnowledgeBase& kb);
TemplateSet load_templates(const std::filesystem::path& path, const knowledge::KnowledgeBase& kb);

}  // namespace chromachain::prompt
