#pragma once

#include "chromachain/error.hpp"
#include "chromachain/pipeline/pipeline.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <string_view>

namespace chromachain::cli {

inline constexpr std::array<std::string_view, 5> kStylePresets = {
    "Modern and Simple", "Classical and Elegant", "Cool and Natural", "Warm and Cozy", "Energetic and Dynamic"};

/// 0 ok, 1 design-rule failure, 2 usage or input error, 3 backend or I/O error.
int exit_code(ErrorCode code);

/// The five generate artifacts, keyed by file name, serialized exactly as written.
struct Artifacts {
  std::map<std::string, std::string> files;
  validate::ValidationReport scheme_report;
  validate::ValidationReport assignment_report;
};

/// Runs stages 1 to 3 with automatic selection. Throws on pipeline errors.
Artifacts generate_artifacts(const pipeline::Resources& resources, llm::ChatBackend& backend,
                             const llm::BackendConfig& cfg, const std::string& style,
                             const std::string& scene_id, std::uint64_t seed);

/// Entry point shared by the executable and the tests.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace chromachain::cli
