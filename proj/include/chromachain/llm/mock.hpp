#pragma once

#include "chromachain/color/scheme.hpp"
#include "chromachain/knowledge/rules.hpp"
#include "chromachain/llm/gateway.hpp"
#include "chromachain/scene/scene.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace chromachain::llm {

/// Rule tables driving the offline backend (data/mock_lexicon.json).
struct MockLexicon {
  struct IdeaEntry {
    std::vector<std::string> keywords;
    std::vector<std::string> themes;
    std::optional<int> tones, distance, heaviness;
  };
  std::vector<IdeaEntry> idea_entries;
  IdeaEntry idea_fallback;
  std::size_t max_themes = 5;

  std::map<std::string, std::string> theme_families;
  std::map<std::string, int> family_tones;
  std::map<int, std::string> tone_fallback;
  std::array<int, 3> heaviness_shift{0, 10, 20};
  std::map<std::string, std::vector<std::array<color::NcsColor, 3>>> palettes;
  std::map<std::string, std::string> family_reasoning;

  std::vector<std::string> brighter_words, darker_words, more_saturated_words, less_saturated_words;
  int edit_blackness_step = 15;
  int edit_chromaticness_step = 10;

  std::vector<std::string> furniture, furniture_words, dark_words, messy_words;
  int refine_blackness_step = 15;
  std::map<std::string, color::NcsHue> color_words;
  int default_chromaticness = 40;
};

MockLexicon mock_lexicon_from_json(const nlohmann::json& j);
MockLexicon load_mock_lexicon(const std::filesystem::path& path);

/// Lowercase alphabetic words of `text`, in order.
std::vector<std::string> words_of(std::string_view text);

/// Deterministic rule-based stand-in for the chat model. Works on the
/// structured payload, not on prompt text, and replies with the stage's
/// structured output serialized as JSON.
class MockBackend : public ChatBackend {
 public:
  MockBackend(MockLexicon lexicon, const scene::SceneRegistry* scenes, knowledge::CompositionRules rules = {});

  std::string complete(const CompletionRequest& request) override;

  /// Throws UnknownStage for stages it has no rule for, and InvalidRequest for
  /// payloads missing required fields.
  [[nodiscard]] nlohmann::json generate(Stage stage, const nlohmann::json& payload, std::uint64_t seed,
                                        int attempt = 0) const;

  [[nodiscard]] const MockLexicon& lexicon() const { return lexicon_; }

 private:
  nlohmann::json idea(const nlohmann::json& payload, std::uint64_t seed, int attempt) const;
  nlohmann::json word_color(const nlohmann::json& payload, std::uint64_t seed, int attempt) const;
  nlohmann::json coloring(const nlohmann::json& payload) const;
  nlohmann::json customize(const nlohmann::json& payload) const;
  nlohmann::json refine(const nlohmann::json& payload) const;

  MockLexicon lexicon_;
  const scene::SceneRegistry* scenes_;
  knowledge::CompositionRules rules_;
};

/// Mock stage-3 core, exposed for tests: greedy role filling by area with a
/// contrast-aware choice, then a deterministic repair pass.
scene::ColorAssignment mock_assign(const scene::SceneSpec& s, const color::ColorScheme& scheme,
                                   const knowledge::CompositionRules& rules,
                                   const std::map<std::string, color::NcsColor>& pinned = {});

}  // namespace chromachain::llm
