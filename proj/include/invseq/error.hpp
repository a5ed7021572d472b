#pragma once

#include <stdexcept>
#include <string>

namespace invseq {

enum class ErrorKind {
  EmptyWord,
  InvalidSequence,
  InvalidPattern,
  GuardExceeded,
  RankUndefined,
  BadStep,
  BelowAxis,
  ForbiddenFactor,
  BadTerminal,
  BadEndpoint,
  StepNotInF,
  BadLabel,
  BelowDiagonal,
  PatternViolation,
  BadBoardLength,
  DomainError,
  NonInvertibleConstantTerm,
  BadComposition,
  ParseError,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every recoverable failure in the library is reported through this type;
/// `kind()` names the contract that was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace invseq
