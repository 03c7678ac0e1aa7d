#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace flowkit {

enum class ErrorCode {
  kInvalidVertex,
  kSourceSinkViolation,
  kDuplicateArc,
  kAntiparallelArc,
  kNegativeCapacity,
  kUnboundedCapacity,
  kInvalidFlow,
  kNotMaximal,
  kNotOptimal,
  kInfeasible,
  kMalformed,
  kBudgetExceeded,
  kSourceConditionViolated,
  kNotBounded,
  kParse,
};

const char* error_code_name(ErrorCode code);

/// Single exception type for the library. `witness` carries the ids that
/// certify the failure when there are any (an augmenting path, violating
/// facets, ...).
class FlowError : public std::runtime_error {
 public:
  FlowError(ErrorCode code, const std::string& message, std::vector<int> witness = {})
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code),
        witness_(std::move(witness)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::vector<int>& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::vector<int> witness_;
};

/// Input error with a 1-based line number.
class ParseError : public FlowError {
 public:
  ParseError(int line, const std::string& message)
      : FlowError(ErrorCode::kParse, "line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace flowkit
