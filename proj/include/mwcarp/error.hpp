#pragma once

#include <stdexcept>
#include <string>

namespace mwcarp {

enum class ErrorCode {
  kInvalidGraph,
  kNotEulerian,
  kDisconnected,
  kStartNotInGraph,
  kDanglingReference,
  kInfeasible,
  kTooLarge,
  kRepsDontCover,
  kUnreachable,
  kDemandExceedsCapacity,
  kParseError,
  kSemanticError,
  kGenerationFailed,
  kNotStronglyConnected,
};

const char* to_string(ErrorCode code);

// All library failures are reported through this exception type; the code
// lets callers (the CLI in particular) map failures onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mwcarp
