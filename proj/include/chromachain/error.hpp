#pragma once

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace chromachain {

// Append-only: the text form of each code is part of the HTTP and CLI contract.
enum class ErrorCode {
  // color-core
  kMalformedNotation,
  kInvalidSum,
  kInconsistentNeutral,
  kNonAdjacentHuePair,
  kNotationOverflow,
  kNeutralHasNoAngle,
  kInvalidColor,
  // knowledge-base / scene files
  kSchemaViolation,
  kExampleParseFailure,
  kAreaSumMismatch,
  kDanglingAdjacency,
  kIo,
  // prompt-engine
  kTokenBudgetExceeded,
  kMissingBinding,
  // llm-gateway
  kBackendUnreachable,
  kTimeout,
  kUnparseableAfterRetries,
  kBudgetExceeded,
  kUnknownStage,
  // validators
  kUncoveredElement,
  kUnknownElement,
  // pipeline
  kEmptyIntent,
  kUnknownTheme,
  kInvalidDegree,
  kChainIntegrity,
  kNoValidCandidate,
  kNoValidAssignment,
  kLockConflict,
  kValidationFailed,
  kVersionMismatch,
  kUnknownScene,
  kInvalidSelection,
  // service / cli
  kUnknownSession,
  kInvalidRequest,
  kUsage,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, nlohmann::json details = nullptr);

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }
  [[nodiscard]] const nlohmann::json& details() const noexcept { return details_; }

 private:
  ErrorCode code_;
  nlohmann::json details_;
};

}  // namespace chromachain
