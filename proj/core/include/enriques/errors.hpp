#ifndef ENRIQUES_ERRORS_HPP
#define ENRIQUES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace enriques {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed user input (JSON, bracket syntax, flags).
struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(what) {}
};

// An operation was called outside its stated domain.
struct PreconditionError : Error {
  explicit PreconditionError(const std::string& what) : Error(what) {}
};

// Checked 64-bit arithmetic overflowed.  Distinct from every other failure
// so callers can tell "the computation needs wider integers" apart from
// "the input was wrong".
struct OverflowError : Error {
  explicit OverflowError(const std::string& what) : Error(what) {}
};

// A bounded search or a step-capped reduction ran out of budget.
struct LimitError : Error {
  explicit LimitError(const std::string& what) : Error(what) {}
};
struct SearchLimitError : LimitError {
  explicit SearchLimitError(const std::string& what) : LimitError(what) {}
};
struct StepCapError : LimitError {
  explicit StepCapError(const std::string& what) : LimitError(what) {}
};

// The pairing equation has no solution (target not a multiple of the content).
struct UnreachableTargetError : Error {
  explicit UnreachableTargetError(const std::string& what) : Error(what) {}
};

// An internal postcondition failed.  Should be unreachable.
struct InvariantError : Error {
  explicit InvariantError(const std::string& what) : Error(what) {}
};

// A move trace failed to replay.  Carries the offending step index
// (-1 for the final-vector comparison).
struct TraceError : Error {
  int step;
  TraceError(int step_index, const std::string& what)
      : Error("trace step " + std::to_string(step_index) + ": " + what),
        step(step_index) {}
};

}  // namespace enriques

#endif
