#include "chromachain/llm/gateway.hpp"

#include "chromachain/error.hpp"
#include "chromachain/llm/output_schema.hpp"

namespace chromachain::llm {

void check_config(const BackendConfig& cfg) {
  if (!(cfg.temperature >= 0.0 && cfg.temperature <= 2.0)) {
    throw Error(ErrorCode::kInvalidRequest, "temperature must be in [0, 2]");
  }
  if (cfg.max_retries < 0) throw Error(ErrorCode::kInvalidRequest, "max_retries must be >= 0");
  if (cfg.max_tokens <= 0) throw Error(ErrorCode::kInvalidRequest, "max_tokens must be > 0");
}

CompletionResult complete_structured(ChatBackend& backend, const prompt::RenderedPrompt& prompt,
                                     const nlohmann::json& payload, const BackendConfig& cfg, int attempt,
                                     std::size_t token_budget) {
  check_config(cfg);
  if (prompt.token_estimate > token_budget) {
    throw Error(ErrorCode::kBudgetExceeded,
                "prompt estimate " + std::to_string(prompt.token_estimate) + " exceeds budget " +
                    std::to_string(token_budget),
                {{"estimate", prompt.token_estimate}, {"budget", token_budget}});
  }
  const auto started = std::chrono::steady_clock::now();
  CompletionRequest request;
  request.stage = prompt.stage;
  request.payload = payload;
  request.messages.push_back({"user", prompt.text});
  request.model = cfg.model;
  request.temperature = cfg.temperature;
  request.max_tokens = cfg.max_tokens;
  request.seed = cfg.seed;
  request.attempt = attempt;

  CompletionResult result;
  for (int i = 0; i <= cfg.max_retries; ++i) {
    std::string raw = backend.complete(request);
    ++result.attempts;
    result.raw_attempts.push_back(raw);
    result.raw_text = raw;
    try {
      result.parsed_payload = check_stage_output(prompt.stage, extract_json(raw));
      result.parse_error.clear();
      break;
    } catch (const Error& e) {
      result.parse_error = e.what();
    } catch (const nlohmann::json::exception& e) {
      result.parse_error = e.what();
    }
    request.messages.push_back({"assistant", raw});
    request.messages.push_back({"user", "Your previous output failed to parse because " + result.parse_error +
                                            "; emit only the structured format."});
  }
  result.latency =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);
  if (!result.parsed_payload) {
    throw Error(ErrorCode::kUnparseableAfterRetries,
                std::string(to_string(prompt.stage)) + " output unparseable after " +
                    std::to_string(result.attempts) + " attempts: " + result.parse_error,
                {{"attempts", result.attempts}, {"raw_outputs", result.raw_attempts}, {"last_error", result.parse_error}});
  }
  return result;
}

}  // namespace chromachain::llm
