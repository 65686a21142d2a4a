#include "chromachain/knowledge/knowledge.hpp"

#include "chromachain/error.hpp"
#include "chromachain/llm/output_schema.hpp"

#include <algorithm>
#include <fstream>
#include <set>

namespace chromachain::knowledge {

namespace {

[[noreturn]] void violation(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::kSchemaViolation, where + ": " + what);
}

bool bank_stage(Stage s) {
  return s == Stage::kIdeaPrompting || s == Stage::kWordColor || s == Stage::kColoring;
}

std::optional<std::string> example_scene(const FewShotExample& e) {
  if (e.input.is_object() && e.input.contains("scene_id") && e.input.at("scene_id").is_string()) {
    return e.input.at("scene_id").get<std::string>();
  }
  return std::nullopt;
}

void check_example_input(Stage stage, const nlohmann::json& in) {
  if (!in.is_object()) throw Error(ErrorCode::kSchemaViolation, "input: expected object");
  switch (stage) {
    case Stage::kIdeaPrompting:
      if (!in.contains("intent") || !in.at("intent").is_string() || in.at("intent").get<std::string>().empty()) {
        throw Error(ErrorCode::kSchemaViolation, "input.intent: expected non-empty string");
      }
      break;
    case Stage::kWordColor:
      if (!in.contains("concepts")) throw Error(ErrorCode::kSchemaViolation, "input.concepts: missing");
      (void)in.at("concepts").get<color::DesignConcepts>();
      break;
    case Stage::kColoring:
      if (!in.contains("scene_id") || !in.at("scene_id").is_string()) {
        throw Error(ErrorCode::kSchemaViolation, "input.scene_id: expected string");
      }
      if (!in.contains("scheme")) throw Error(ErrorCode::kSchemaViolation, "input.scheme: missing");
      (void)in.at("scheme").get<color::ColorScheme>();
      break;
    default:
      break;
  }
}

FewShotBank bank_from_json(Stage stage, const nlohmann::json& j) {
  const std::string where = "few_shot." + std::string(to_string(stage));
  if (!j.is_array()) violation(where, "expected array of examples");
  FewShotBank bank{stage, {}};
  std::set<std::string> ids;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& ej = j[i];
    const std::string name = where + "[" + std::to_string(i) + "]";
    if (!ej.is_object() || !ej.contains("id") || !ej.at("id").is_string()) violation(name, "expected {id, input, output}");
    FewShotExample e;
    e.id = ej.at("id").get<std::string>();
    if (!ids.insert(e.id).second) violation(name, "duplicate example id '" + e.id + "'");
    if (!ej.contains("input") || !ej.contains("output")) violation(name, "expected {id, input, output}");
    try {
      check_example_input(stage, ej.at("input"));
      e.input = ej.at("input");
      e.output = llm::check_stage_output(stage, ej.at("output"));
    } catch (const Error& err) {
      throw Error(ErrorCode::kExampleParseFailure, "few-shot example '" + e.id + "' (" + name + "): " + err.what(),
                  {{"example", e.id}, {"stage", to_string(stage)}});
    } catch (const nlohmann::json::exception& err) {
      throw Error(ErrorCode::kExampleParseFailure, "few-shot example '" + e.id + "' (" + name + "): " + err.what(),
                  {{"example", e.id}, {"stage", to_string(stage)}});
    }
    bank.examples.push_back(std::move(e));
  }
  // Coloring banks are counted per scene.
  std::map<std::string, std::size_t> counts;
  for (const auto& e : bank.examples) ++counts[stage == Stage::kColoring ? example_scene(e).value_or("") : ""];
  for (const auto& [scene, n] : counts) {
    if (n < kMinExamples || n > kMaxExamples) {
      violation(where + (scene.empty() ? "" : " (scene " + scene + ")"),
                "expected 3 to 5 examples, got " + std::to_string(n));
    }
  }
  return bank;
}

}  // namespace

std::vector<const FewShotExample*> FewShotBank::select(const std::optional<std::string>& scene_id) const {
  std::vector<const FewShotExample*> out;
  for (const auto& e : examples) {
    if (stage == Stage::kColoring && example_scene(e) != scene_id) continue;
    out.push_back(&e);
  }
  return out;
}

const KnowledgeBlock* KnowledgeBase::block(std::string_view id) const {
  for (const auto& b : blocks) {
    if (b.id == id) return &b;
  }
  return nullptr;
}

std::vector<const KnowledgeBlock*> KnowledgeBase::blocks_for(Stage s) const {
  std::vector<const KnowledgeBlock*> out;
  for (const auto& b : blocks) {
    if (std::find(b.applies_to.begin(), b.applies_to.end(), s) != b.applies_to.end()) out.push_back(&b);
  }
  return out;
}

const FewShotBank& KnowledgeBase::bank(Stage s) const {
  static const std::map<Stage, FewShotBank> empty = [] {
    std::map<Stage, FewShotBank> m;
    for (auto st : kAllStages) m[st] = FewShotBank{st, {}};
    return m;
  }();
  auto it = few_shot.find(s);
  return it == few_shot.end() ? empty.at(s) : it->second;
}

KnowledgeBase knowledge_from_json(const nlohmann::json& j) {
  if (!j.is_object()) violation("knowledge", "expected object");
  KnowledgeBase kb;
  if (j.contains("rules")) kb.rules = j.at("rules").get<CompositionRules>();
  if (j.contains("mood_thresholds")) kb.mood_thresholds = j.at("mood_thresholds").get<color::MoodThresholds>();
  if (j.contains("display_anchors")) kb.display_anchors = j.at("display_anchors").get<color::DisplayAnchors>();

  if (j.contains("knowledge_blocks")) {
    const auto& blocks = j.at("knowledge_blocks");
    if (!blocks.is_array()) violation("knowledge_blocks", "expected array");
    std::set<std::string> ids;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      const auto& bj = blocks[i];
      const std::string where = "knowledge_blocks[" + std::to_string(i) + "]";
      if (!bj.is_object()) violation(where, "expected object");
      KnowledgeBlock b;
      if (!bj.contains("id") || !bj.at("id").is_string() || bj.at("id").get<std::string>().empty()) {
        violation(where + ".id", "expected non-empty string");
      }
      b.id = bj.at("id").get<std::string>();
      if (!ids.insert(b.id).second) violation(where + ".id", "duplicate id '" + b.id + "'");
      if (!bj.contains("body") || !bj.at("body").is_string() || bj.at("body").get<std::string>().empty()) {
        violation(where + ".body", "expected non-empty string");
      }
      b.body = bj.at("body").get<std::string>();
      if (!bj.contains("applies_to") || !bj.at("applies_to").is_array()) {
        violation(where + ".applies_to", "expected array of stage names");
      }
      for (const auto& s : bj.at("applies_to")) {
        auto stage = s.is_string() ? stage_from_string(s.get<std::string>()) : std::nullopt;
        if (!stage) violation(where + ".applies_to", "unknown stage " + s.dump());
        b.applies_to.push_back(*stage);
      }
      kb.blocks.push_back(std::move(b));
    }
  }

  if (j.contains("few_shot")) {
    const auto& fs = j.at("few_shot");
    if (!fs.is_object()) violation("few_shot", "expected object keyed by stage");
    for (const auto& [key, value] : fs.items()) {
      auto stage = stage_from_string(key);
      if (!stage || !bank_stage(*stage)) violation("few_shot." + key, "not a few-shot stage");
      kb.few_shot[*stage] = bank_from_json(*stage, value);
    }
  }
  return kb;
}

nlohmann::json knowledge_to_json(const KnowledgeBase& kb) {
  nlohmann::json blocks = nlohmann::json::array();
  for (const auto& b : kb.blocks) {
    nlohmann::json stages = nlohmann::json::array();
    for (auto s : b.applies_to) stages.push_back(to_string(s));
    blocks.push_back({{"id", b.id}, {"body", b.body}, {"applies_to", std::move(stages)}});
  }
  nlohmann::json few_shot = nlohmann::json::object();
  for (const auto& [stage, bank] : kb.few_shot) {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& e : bank.examples) list.push_back({{"id", e.id}, {"input", e.input}, {"output", e.output}});
    few_shot[std::string(to_string(stage))] = std::move(list);
  }
  return nlohmann::json{{"rules", kb.rules},
                        {"mood_thresholds", kb.mood_thresholds},
                        {"display_anchors", kb.display_anchors},
                        {"knowledge_blocks", std::move(blocks)},
                        {"few_shot", std::move(few_shot)}};
}

KnowledgeBase load_knowledge(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open knowledge file " + path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kSchemaViolation, path.string() + ": " + e.what());
  }
  return knowledge_from_json(j);
}

}  // namespace chromachain::knowledge
