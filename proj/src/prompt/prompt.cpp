#include "chromachain/prompt/prompt.hpp"

#include "chromachain/error.hpp"

#include <algorithm>
#include <fstream>
#include <set>

namespace chromachain::prompt {

namespace {

std::string binding_text(const nlohmann::json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

const nlohmann::json& binding(const nlohmann::json& bindings, const std::string& name, Stage stage) {
  if (!bindings.is_object() || !bindings.contains(name)) {
    throw Error(ErrorCode::kMissingBinding,
                "prompt for " + std::string(to_string(stage)) + " needs a binding for '" + name + "'",
                {{"binding", name}});
  }
  return bindings.at(name);
}

std::string substitute(std::string_view text, const nlohmann::json& bindings, Stage stage) {
  std::string out;
  std::size_t pos = 0;
  while (true) {
    const auto open = text.find("{{", pos);
    if (open == std::string_view::npos) break;
    const auto close = text.find("}}", open + 2);
    if (close == std::string_view::npos) break;
    out.append(text.substr(pos, open - pos));
    out += binding_text(binding(bindings, std::string(text.substr(open + 2, close - open - 2)), stage));
    pos = close + 2;
  }
  out.append(text.substr(pos));
  return out;
}

std::string string_field(const nlohmann::json& j, const char* name, const std::string& where) {
  if (!j.contains(name) || !j.at(name).is_string()) {
    throw Error(ErrorCode::kSchemaViolation, where + "." + name + ": expected string");
  }
  return j.at(name).get<std::string>();
}

std::vector<std::string> string_list(const nlohmann::json& j, const char* name, const std::string& where) {
  std::vector<std::string> out;
  if (!j.contains(name)) return out;
  if (!j.at(name).is_array()) throw Error(ErrorCode::kSchemaViolation, where + "." + name + ": expected array");
  for (const auto& v : j.at(name)) {
    if (!v.is_string()) throw Error(ErrorCode::kSchemaViolation, where + "." + name + ": expected strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

}  // namespace

std::size_t estimate_tokens(std::string_view text) { return (text.size() + 2) / 3; }

RenderedPrompt render_prompt(const PromptTemplate& t, const knowledge::KnowledgeBase& kb,
                             const nlohmann::json& bindings, std::size_t token_budget) {
  std::string text;
  text += kBackgroundSentinel;
  text += '\n';
  text += substitute(t.background_task, bindings, t.stage);
  text += "\n\n";

  text += kKnowledgeSentinel;
  text += '\n';
  // Template order first, then anything else registered for the stage.
  std::vector<const knowledge::KnowledgeBlock*> blocks;
  for (const auto& id : t.knowledge_block_ids) {
    if (const auto* b = kb.block(id)) blocks.push_back(b);
  }
  for (const auto* b : kb.blocks_for(t.stage)) {
    if (std::find(blocks.begin(), blocks.end(), b) == blocks.end()) blocks.push_back(b);
  }
  for (const auto* b : blocks) {
    text += "[" + b->id + "]\n" + b->body + "\n";
  }
  text += '\n';

  text += kFewShotSentinel;
  text += '\n';
  std::vector<const knowledge::FewShotExample*> examples;
  if (t.use_few_shot) {
    std::optional<std::string> scene_id;
    if (bindings.is_object() && bindings.contains("scene_id") && bindings.at("scene_id").is_string()) {
      scene_id = bindings.at("scene_id").get<std::string>();
    }
    examples = kb.bank(t.stage).select(scene_id);
  }
  if (examples.empty()) {
    text += kNoExamplesMarker;
    text += '\n';
  }
  for (std::size_t i = 0; i < examples.size(); ++i) {
    text += "Example " + std::to_string(i + 1) + "\n";
    text += "Input: " + examples[i]->input.dump() + "\n";
    text += "Output: " + examples[i]->output.dump() + "\n";
  }
  text += '\n';

  text += kInputSentinel;
  text += '\n';
  text += substitute(t.prefix, bindings, t.stage);
  text += '\n';
  for (const auto& slot : t.input_slots) {
    text += slot + ": " + binding_text(binding(bindings, slot, t.stage)) + "\n";
  }

  RenderedPrompt out{t.stage, std::move(text), 0};
  out.token_estimate = estimate_tokens(out.text);
  if (out.token_estimate > token_budget) {
    throw Error(ErrorCode::kTokenBudgetExceeded,
                std::string(to_string(t.stage)) + " prompt needs about " + std::to_string(out.token_estimate) +
                    " tokens, budget is " + std::to_string(token_budget),
                {{"estimate", out.token_estimate}, {"budget", token_budget}});
  }
  return out;
}

void to_json(nlohmann::json& j, const PromptTemplate& t) {
  j = nlohmann::json{{"background_task", t.background_task},
                     {"knowledge_block_ids", t.knowledge_block_ids},
                     {"use_few_shot", t.use_few_shot},
                     {"prefix", t.prefix},
                     {"input_slots", t.input_slots}};
}

TemplateSet templates_from_json(const nlohmann::json& j, const knowledge::KnowledgeBase& kb) {
  if (!j.is_object()) throw Error(ErrorCode::kSchemaViolation, "templates: expected object keyed by stage");
  TemplateSet out;
  for (const auto& [key, tj] : j.items()) {
    const std::string where = "templates." + key;
    auto stage = stage_from_string(key);
    if (!stage) throw Error(ErrorCode::kSchemaViolation, where + ": unknown stage");
    if (!tj.is_object()) throw Error(ErrorCode::kSchemaViolation, where + ": expected object");
    PromptTemplate t;
    t.stage = *stage;
    t.background_task = string_field(tj, "background_task", where);
    t.prefix = string_field(tj, "prefix", where);
    t.knowledge_block_ids = string_list(tj, "knowledge_block_ids", where);
    t.input_slots = string_list(tj, "input_slots", where);
    if (tj.contains("use_few_shot")) {
      if (!tj.at("use_few_shot").is_boolean()) {
        throw Error(ErrorCode::kSchemaViolation, where + ".use_few_shot: expected boolean");
      }
      t.use_few_shot = tj.at("use_few_shot").get<bool>();
    }
    for (const auto& id : t.knowledge_block_ids) {
      if (kb.block(id) == nullptr) {
        throw Error(ErrorCode::kSchemaViolation, where + ".knowledge_block_ids: unknown block '" + id + "'");
      }
    }
    if (t.input_slots.empty()) throw Error(ErrorCode::kSchemaViolation, where + ".input_slots: empty");
    out[*stage] = std::move(t);
  }
  for (auto s : kAllStages) {
    if (!out.count(s)) {
      throw Error(ErrorCode::kSchemaViolation, "templates: missing stage " + std::string(to_string(s)));
    }
  }
  return out;
}

TemplateSet load_templates(const std::filesystem::path& path, const knowledge::KnowledgeBase& kb) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open template file " + path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kSchemaViolation, path.string() + ": " + e.what());
  }
  return templates_from_json(j, kb);
}

}  // namespace chromachain::prompt
