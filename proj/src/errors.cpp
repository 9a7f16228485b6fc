#include "kdvstar/errors.hpp"

namespace kdvstar {

const char* error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::AlphaTooSmall: return "AlphaTooSmall";
    case ErrorCode::NonpositiveLength: return "NonpositiveLength";
    case ErrorCode::TooFewEdges: return "TooFewEdges";
    case ErrorCode::OrderExceeded: return "OrderExceeded";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::DegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorCode::EdgeMismatch: return "EdgeMismatch";
    case ErrorCode::SingularConstraintSystem: return "SingularConstraintSystem";
    case ErrorCode::GridTooCoarse: return "GridTooCoarse";
    case ErrorCode::LinearSolveFailure: return "LinearSolveFailure";
    case ErrorCode::PicardDiverged: return "PicardDiverged";
    case ErrorCode::CompatibilityRejected: return "CompatibilityRejected";
    case ErrorCode::UnequalLengths: return "UnequalLengths";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownCommand: return "UnknownCommand";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    }
    return "UnknownError";
}

} // namespace kdvstar
