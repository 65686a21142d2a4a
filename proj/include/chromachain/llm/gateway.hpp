#pragma once

#include "chromachain/prompt/prompt.hpp"
#include "chromachain/stage.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace chromachain::llm {

inline constexpr const char* kApiKeyEnv = "CHROMACHAIN_API_KEY";

struct BackendConfig {
  enum class Kind { kLive, kMock };
  Kind kind = Kind::kMock;
  std::string endpoint = "https://api.openai.com/v1/chat/completions";
  std::string model = "gpt-3.5-turbo";
  double temperature = 0.7;
  int max_tokens = 4096;
  int max_retries = 3;
  double timeout_seconds = 60.0;
  std::uint64_t seed = 0;
};

/// Throws InvalidRequest unless temperature is in [0, 2] and max_retries >= 0.
void check_config(const BackendConfig& cfg);

struct ChatMessage {
  std::string role;  // system | user | assistant
  std::string content;

  friend bool operator==(const ChatMessage&, const ChatMessage&) = default;
};

struct CompletionRequest {
  Stage stage = Stage::kIdeaPrompting;
  nlohmann::json payload;  // the structured bindings behind the prompt
  std::vector<ChatMessage> messages;
  std::string model;
  double temperature = 0.7;
  int max_tokens = 4096;
  std::uint64_t seed = 0;
  int attempt = 0;  // 0-based; bumped by pipeline-level regeneration
};

/// One chat-completion call. Implementations throw BackendUnreachable or Timeout.
class ChatBackend {
 public:
  virtual ~ChatBackend() = default;
  virtual std::string complete(const CompletionRequest& request) = 0;
};

struct CompletionResult {
  std::string raw_text;
  std::optional<nlohmann::json> parsed_payload;
  std::string parse_error;
  int attempts = 0;
  std::chrono::milliseconds latency{0};
  std::vector<std::string> raw_attempts;
};

/// Renders nothing; sends `prompt` and parses the reply against the stage
/// output schema. Parse failures are retried up to cfg.max_retries times with
/// a corrective message appended; transport errors propagate immediately.
/// Throws BudgetExceeded when the prompt is over `token_budget`, and
/// UnparseableAfterRetries (raw outputs and attempts in the details).
CompletionResult complete_structured(ChatBackend& backend, const prompt::RenderedPrompt& prompt,
                                     const nlohmann::json& payload, const BackendConfig& cfg,
                                     int attempt = 0, std::size_t token_budget = prompt::kDefaultTokenBudget);

/// Chat-completion over HTTP(S). The API key is read from CHROMACHAIN_API_KEY
/// when not given.
class HttpChatBackend : public ChatBackend {
 public:
  explicit HttpChatBackend(BackendConfig cfg, std::optional<std::string> api_key = std::nullopt);
  std::string complete(const CompletionRequest& request) override;

 private:
  BackendConfig cfg_;
  std::string api_key_;
};

}  // namespace chromachain::llm
