#pragma once

#include <stdexcept>
#include <string>

namespace qcjt {

enum class ErrorKind {
  NotPrime,
  NoPrimitiveRoot,
  DivisionByZero,
  FieldTooLarge,
  FieldMismatch,
  DegreeMismatch,
  LengthMismatch,
  AllZero,
  BadRange,
  ZeroLambda,
  AlgebraMismatch,
  InvalidAutomorphism,
  InconsistentForm,
  SamplingExhausted,
  NotAPartition,
  ScanTooLarge,
  MethodUnavailable,
  SizeGuardExceeded,
  TooFewEntries,
  FreeSummand,
  NotSingleNonprojective,
  PreconditionUnmet,
  InvalidModule,
  BadInput,
  Internal,
};

const char* to_string(ErrorKind kind);

// All library failures are reported through this type; kind() is the
// machine-readable part and is what the CLI prints in diagnostics.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

}  // namespace qcjt
