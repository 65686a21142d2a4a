#include "chromachain/error.hpp"

namespace chromachain {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedNotation: return "MalformedNotation";
    case ErrorCode::kInvalidSum: return "InvalidSum";
    case ErrorCode::kInconsistentNeutral: return "InconsistentNeutral";
    case ErrorCode::kNonAdjacentHuePair: return "NonAdjacentHuePair";
    case ErrorCode::kNotationOverflow: return "NotationOverflow";
    case ErrorCode::kNeutralHasNoAngle: return "NeutralHasNoAngle";
    case ErrorCode::kInvalidColor: return "InvalidColor";
    case ErrorCode::kSchemaViolation: return "SchemaViolation";
    case ErrorCode::kExampleParseFailure: return "ExampleParseFailure";
    case ErrorCode::kAreaSumMismatch: return "AreaSumMismatch";
    case ErrorCode::kDanglingAdjacency: return "DanglingAdjacency";
    case ErrorCode::kIo: return "IoError";
    case ErrorCode::kTokenBudgetExceeded: return "TokenBudgetExceeded";
    case ErrorCode::kMissingBinding: return "MissingBinding";
    case ErrorCode::kBackendUnreachable: return "BackendUnreachable";
    case ErrorCode::kTimeout: return "Timeout";
    case ErrorCode::kUnparseableAfterRetries: return "UnparseableAfterRetries";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kUnknownStage: return "UnknownStage";
    case ErrorCode::kUncoveredElement: return "UncoveredElement";
    case ErrorCode::kUnknownElement: return "UnknownElement";
    case ErrorCode::kEmptyIntent: return "EmptyIntent";
    case ErrorCode::kUnknownTheme: return "UnknownTheme";
    case ErrorCode::kInvalidDegree: return "InvalidDegree";
    case ErrorCode::kChainIntegrity: return "ChainIntegrity";
    case ErrorCode::kNoValidCandidate: return "NoValidCandidate";
    case ErrorCode::kNoValidAssignment: return "NoValidAssignment";
    case ErrorCode::kLockConflict: return "LockConflict";
    case ErrorCode::kValidationFailed: return "ValidationFailed";
    case ErrorCode::kVersionMismatch: return "VersionMismatch";
    case ErrorCode::kUnknownScene: return "UnknownScene";
    case ErrorCode::kInvalidSelection: return "InvalidSelection";
    case ErrorCode::kUnknownSession: return "UnknownSession";
    case ErrorCode::kInvalidRequest: return "InvalidRequest";
    case ErrorCode::kUsage: return "UsageError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, nlohmann::json details)
    : std::runtime_error(message), code_(code), details_(std::move(details)) {}

}  // namespace chromachain
