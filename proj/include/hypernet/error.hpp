#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hypernet {

enum class ErrorKind {
  InvalidHypergraph,
  InvalidReference,
  DegenerateEndpoints,
  LimitExceeded,
  BudgetExceeded,
  NotFHypergraph,
  MultipleTerminalEdges,
  ParseError,
  Not3Sat,
  EmptyFormula,
  MalformedHyperpath,
  WitnessNotSatisfying,
  TooLarge,
  OracleTooLarge,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a kind so callers (the CLI in
// particular) can map it to an exit status without string matching.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind), message_(message) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& message() const noexcept { return message_; }

private:
  ErrorKind kind_;
  std::string message_;
};

} // namespace hypernet
