#include "chromachain/llm/output_schema.hpp"

#include "chromachain/error.hpp"

namespace chromachain::llm {

namespace {

const nlohmann::json& field(const nlohmann::json& j, const char* name, const char* where) {
  if (!j.is_object() || !j.contains(name)) {
    throw Error(ErrorCode::kSchemaViolation, std::string(where) + ": missing \"" + name + "\"");
  }
  return j.at(name);
}

const nlohmann::json& nonempty_array(const nlohmann::json& j, const char* name, const char* where) {
  const auto& a = field(j, name, where);
  if (!a.is_array() || a.empty()) {
    throw Error(ErrorCode::kSchemaViolation, std::string(where) + "." + name + ": expected non-empty array");
  }
  return a;
}

}  // namespace

nlohmann::json extract_json(std::string_view raw) {
  // Scan each '{' in order and try the balanced span that starts there.
  for (std::size_t start = raw.find('{'); start != std::string_view::npos; start = raw.find('{', start + 1)) {
    int depth = 0;
    bool in_string = false;
    bool escaped = false;
    for (std::size_t i = start; i < raw.size(); ++i) {
      const char ch = raw[i];
      if (in_string) {
        if (escaped) {
          escaped = false;
        } else if (ch == '\\') {
          escaped = true;
        } else if (ch == '"') {
          in_string = false;
        }
        continue;
      }
      if (ch == '"') {
        in_string = true;
      } else if (ch == '{') {
        ++depth;
      } else if (ch == '}' && --depth == 0) {
        auto parsed = nlohmann::json::parse(raw.substr(start, i - start + 1), nullptr, false);
        if (!parsed.is_discarded()) return parsed;
        break;
      }
    }
  }
  throw Error(ErrorCode::kSchemaViolation, "no JSON object found in model output");
}

std::vector<color::DesignConcepts> concepts_from_output(const nlohmann::json& j) {
  std::vector<color::DesignConcepts> out;
  for (const auto& c : nonempty_array(j, "candidates", "output")) out.push_back(c.get<color::DesignConcepts>());
  return out;
}

std::vector<color::ColorScheme> schemes_from_output(const nlohmann::json& j) {
  std::vector<color::ColorScheme> out;
  for (const auto& s : nonempty_array(j, "schemes", "output")) out.push_back(s.get<color::ColorScheme>());
  return out;
}

color::ColorScheme scheme_from_output(const nlohmann::json& j) {
  return field(j, "scheme", "output").get<color::ColorScheme>();
}

scene::ColorAssignment assignment_from_output(const nlohmann::json& j) {
  const auto& a = field(j, "assignment", "output");
  nonempty_array(a, "elements", "output.assignment");
  return a.get<scene::ColorAssignment>();
}

nlohmann::json concepts_output(const std::vector<color::DesignConcepts>& c) {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& x : c) list.push_back({{"themes", x.themes}, {"mood", x.mood}});
  return {{"candidates", std::move(list)}};
}

nlohmann::json schemes_output(const std::vector<color::ColorScheme>& s) { return {{"schemes", s}}; }

nlohmann::json scheme_output(const color::ColorScheme& s) { return {{"scheme", s}}; }

nlohmann::json assignment_output(const scene::ColorAssignment& a) { return {{"assignment", a}}; }

nlohmann::json check_stage_output(Stage stage, const nlohmann::json& j) {
  switch (stage) {
    case Stage::kIdeaPrompting: return concepts_output(concepts_from_output(j));
    case Stage::kWordColor: return schemes_output(schemes_from_output(j));
    case Stage::kSchemeCustomization: return scheme_output(scheme_from_output(j));
    case Stage::kColoring:
    case Stage::kResultRefinement: return assignment_output(assignment_from_output(j));
  }
  throw Error(ErrorCode::kUnknownStage, "unknown stage");
}

}  // namespace chromachain::llm
