#include "mwcarp/error.hpp"

namespace mwcarp {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidGraph: return "InvalidGraph";
    case ErrorCode::kNotEulerian: return "NotEulerian";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kStartNotInGraph: return "StartNotInGraph";
    case ErrorCode::kDanglingReference: return "DanglingReference";
    case ErrorCode::kInfeasible: return "Infeasible";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kRepsDontCover: return "RepsDontCover";
    case ErrorCode::kUnreachable: return "Unreachable";
    case ErrorCode::kDemandExceedsCapacity: return "DemandExceedsCapacity";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kSemanticError: return "SemanticError";
    case ErrorCode::kGenerationFailed: return "GenerationFailed";
    case ErrorCode::kNotStronglyConnected: return "NotStronglyConnected";
  }
  return "Unknown";
}

}  // namespace mwcarp
