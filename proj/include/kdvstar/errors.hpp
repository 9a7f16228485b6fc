#pragma once

#include <stdexcept>
#include <string>

namespace kdvstar {

enum class ErrorCode {
    AlphaTooSmall,
    NonpositiveLength,
    TooFewEdges,
    OrderExceeded,
    OutOfDomain,
    DegreeCapExceeded,
    EdgeMismatch,
    SingularConstraintSystem,
    GridTooCoarse,
    LinearSolveFailure,
    PicardDiverged,
    CompatibilityRejected,
    UnequalLengths,
    ParseError,
    UnknownCommand,
    InvalidConfig,
};

/// Returns the stable identifier used in CLI/JSON output, e.g. "AlphaTooSmall".
const char* error_code_name(ErrorCode code);

/// Single exception type carrying a machine-readable code plus context message.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

} // namespace kdvstar
