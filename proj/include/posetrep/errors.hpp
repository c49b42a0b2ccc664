#pragma once

#include <stdexcept>
#include <string>

namespace posetrep {

// Base of every recoverable error raised by the library. The four
// subcategories map one-to-one onto the CLI exit codes 1..4.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input: bad labels, bad files, bad relations. Exit code 1.
struct InputError : Error {
  using Error::Error;
};

struct DuplicateLabelError : InputError {
  using InputError::InputError;
};

struct UnknownLabelError : InputError {
  using InputError::InputError;
};

struct CycleError : InputError {
  using InputError::InputError;
};

struct LabelCollisionError : InputError {
  using InputError::InputError;
};

struct InvalidLabelError : InputError {
  using InputError::InputError;
};

struct NegativeDimensionError : InputError {
  using InputError::InputError;
};

struct InvalidDimensionsError : InputError {
  using InputError::InputError;
};

struct InsufficientPrimesError : InputError {
  using InputError::InputError;
};

struct SyntaxError : InputError {
  SyntaxError(int line, int column, const std::string& what)
      : InputError("syntax error at " + std::to_string(line) + ":" +
                   std::to_string(column) + ": " + what),
        line(line),
        column(column) {}
  int line;
  int column;
};

// A mathematical precondition of the requested operation fails. Exit code 2.
struct PreconditionError : Error {
  using Error::Error;
};

struct NotAdmissibleError : PreconditionError {
  explicit NotAdmissibleError(const std::string& certificate)
      : PreconditionError("not admissible: " + certificate),
        certificate(certificate) {}
  std::string certificate;
};

struct HypothesisViolatedError : PreconditionError {
  using PreconditionError::PreconditionError;
};

struct NotMaximalError : PreconditionError {
  using PreconditionError::PreconditionError;
};

struct EmptyVarietyError : PreconditionError {
  using PreconditionError::PreconditionError;
};

// 64-bit arithmetic would wrap. Exit code 3.
struct OverflowError : Error {
  using Error::Error;
};

// An enumeration would exceed its configured budget. Exit code 4.
struct BudgetError : Error {
  using Error::Error;
};

struct SearchSpaceTooLargeError : BudgetError {
  using BudgetError::BudgetError;
};

struct BudgetExceededError : BudgetError {
  using BudgetError::BudgetError;
};

// A verified internal identity failed; indicates a bug, not bad input.
struct InternalInconsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace posetrep
