#include "chromachain/pipeline/resources.hpp"

#include "chromachain/error.hpp"

#include <cstdlib>
#include <fstream>

#ifndef CHROMACHAIN_DEFAULT_DATA_DIR
#define CHROMACHAIN_DEFAULT_DATA_DIR "data"
#endif

namespace chromachain::pipeline {

std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv(kDataDirEnv); env != nullptr && *env != '\0') return env;
  return CHROMACHAIN_DEFAULT_DATA_DIR;
}

knowledge::CompositionRules load_rules(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open rules file " + path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kSchemaViolation, path.string() + ": " + e.what());
  }
  // Accept either a bare rules object or a knowledge file.
  if (j.is_object() && j.contains("rules")) j = j.at("rules");
  return j.get<knowledge::CompositionRules>();
}

Resources load_resources(const std::filesystem::path& data_dir,
                         const std::optional<std::filesystem::path>& rules_path) {
  if (!std::filesystem::is_directory(data_dir)) {
    throw Error(ErrorCode::kIo, "data directory not found: " + data_dir.string());
  }
  Resources r;
  r.kb = knowledge::load_knowledge(data_dir / "knowledge.json");
  if (rules_path) r.kb.rules = load_rules(*rules_path);
  r.templates = prompt::load_templates(data_dir / "templates.json", r.kb);
  r.scenes = scene::SceneRegistry::load_directory(data_dir / "scenes");
  r.lexicon = llm::load_mock_lexicon(data_dir / "mock_lexicon.json");
  return r;
}

}  // namespace chromachain::pipeline
