#include "chromachain/stage.hpp"

namespace chromachain {

std::string_view to_string(Stage s) {
  switch (s) {
    case Stage::kIdeaPrompting: return "idea-prompting";
    case Stage::kWordColor: return "word-color";
    case Stage::kColoring: return "coloring";
    case Stage::kSchemeCustomization: return "scheme-customization";
    case Stage::kResultRefinement: return "result-refinement";
  }
  return "idea-prompting";
}

std::optional<Stage> stage_from_string(std::string_view s) {
  for (auto stage : kAllStages) {
    if (to_string(stage) == s) return stage;
  }
  return std::nullopt;
}

}  // namespace chromachain
