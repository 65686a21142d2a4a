#pragma once

#include "chromachain/color/scheme.hpp"
#include "chromachain/scene/scene.hpp"
#include "chromachain/stage.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace chromachain::llm {

// Structured output contract per stage:
//   idea-prompting        {"candidates": [{"themes": [...], "mood": {...}}, ...]}
//   word-color            {"schemes": [<scheme>, ...]}
//   coloring              {"assignment": {"elements": [{"id", "role", "color"}], "reasoning"}}
//   scheme-customization  {"scheme": <scheme>}
//   result-refinement     same as coloring

/// Pulls the first JSON object out of model text, tolerating prose and
/// ``` fences around it. Throws SchemaViolation when none parses.
nlohmann::json extract_json(std::string_view raw);

/// Checks `j` against the stage's output shape and returns it normalized
/// (typed round-trip, so notation and defaults are canonical). Throws Error.
nlohmann::json check_stage_output(Stage stage, const nlohmann::json& j);

std::vector<color::DesignConcepts> concepts_from_output(const nlohmann::json& j);
std::vector<color::ColorScheme> schemes_from_output(const nlohmann::json& j);
color::ColorScheme scheme_from_output(const nlohmann::json& j);
scene::ColorAssignment assignment_from_output(const nlohmann::json& j);

nlohmann::json concepts_output(const std::vector<color::DesignConcepts>& c);
nlohmann::json schemes_output(const std::vector<color::ColorScheme>& s);
nlohmann::json scheme_output(const color::ColorScheme& s);
nlohmann::json assignment_output(const scene::ColorAssignment& a);

}  // namespace chromachain::llm
