#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace chromachain {

/// Every prompt-driven step. The first three form the chain.
enum class Stage {
  kIdeaPrompting,
  kWordColor,
  kColoring,
  kSchemeCustomization,
  kResultRefinement,
};

inline constexpr std::array<Stage, 5> kAllStages{Stage::kIdeaPrompting, Stage::kWordColor, Stage::kColoring,
                                                 Stage::kSchemeCustomization, Stage::kResultRefinement};

/// "idea-prompting", "word-color", "coloring", "scheme-customization", "result-refinement".
std::string_view to_string(Stage s);
std::optional<Stage> stage_from_string(std::string_view s);

}  // namespace chromachain
