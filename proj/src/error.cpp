#include "invseq/error.hpp"

namespace invseq {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::EmptyWord: return "EmptyWord";
    case ErrorKind::InvalidSequence: return "InvalidSequence";
    case ErrorKind::InvalidPattern: return "InvalidPattern";
    case ErrorKind::GuardExceeded: return "GuardExceeded";
    case ErrorKind::RankUndefined: return "RankUndefined";
    case ErrorKind::BadStep: return "BadStep";
    case ErrorKind::BelowAxis: return "BelowAxis";
    case ErrorKind::ForbiddenFactor: return "ForbiddenFactor";
    case ErrorKind::BadTerminal: return "BadTerminal";
    case ErrorKind::BadEndpoint: return "BadEndpoint";
    case ErrorKind::StepNotInF: return "StepNotInF";
    case ErrorKind::BadLabel: return "BadLabel";
    case ErrorKind::BelowDiagonal: return "BelowDiagonal";
    case ErrorKind::PatternViolation: return "PatternViolation";
    case ErrorKind::BadBoardLength: return "BadBoardLength";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::NonInvertibleConstantTerm: return "NonInvertibleConstantTerm";
    case ErrorKind::BadComposition: return "BadComposition";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace invseq
