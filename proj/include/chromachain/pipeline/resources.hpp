#pragma once

#include "chromachain/knowledge/knowledge.hpp"
#include "chromachain/llm/mock.hpp"
#include "chromachain/prompt/prompt.hpp"
#include "chromachain/scene/scene.hpp"

#include <filesystem>
#include <optional>

namespace chromachain::pipeline {

inline constexpr const char* kDataDirEnv = "CHROMACHAIN_DATA_DIR";

/// Everything loaded from the data directory:
///   knowledge.json, templates.json, mock_lexicon.json, scenes/*.json
struct Resources {
  knowledge::KnowledgeBase kb;
  prompt::TemplateSet templates;
  scene::SceneRegistry scenes;
  llm::MockLexicon lexicon;
};

/// $CHROMACHAIN_DATA_DIR, else the directory baked in at build time.
std::filesystem::path default_data_dir();

/// `rules_path` replaces the rules section of knowledge.json when given.
Resources load_resources(const std::filesystem::path& data_dir,
                         const std::optional<std::filesystem::path>& rules_path = std::nullopt);

knowledge::CompositionRules load_rules(const std::filesystem::path& path);

}  // namespace chromachain::pipeline
