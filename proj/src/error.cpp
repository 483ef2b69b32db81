#include "qcjt/error.hpp"

namespace qcjt {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::NoPrimitiveRoot: return "NoPrimitiveRoot";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldTooLarge: return "FieldTooLarge";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::AllZero: return "AllZero";
    case ErrorKind::BadRange: return "BadRange";
    case ErrorKind::ZeroLambda: return "ZeroLambda";
    case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorKind::InvalidAutomorphism: return "InvalidAutomorphism";
    case ErrorKind::InconsistentForm: return "InconsistentForm";
    case ErrorKind::SamplingExhausted: return "SamplingExhausted";
    case ErrorKind::NotAPartition: return "NotAPartition";
    case ErrorKind::ScanTooLarge: return "ScanTooLarge";
    case ErrorKind::MethodUnavailable: return "MethodUnavailable";
    case ErrorKind::SizeGuardExceeded: return "SizeGuardExceeded";
    case ErrorKind::TooFewEntries: return "TooFewEntries";
    case ErrorKind::FreeSummand: return "FreeSummand";
    case ErrorKind::NotSingleNonprojective: return "NotSingleNonprojective";
    case ErrorKind::PreconditionUnmet: return "PreconditionUnmet";
    case ErrorKind::InvalidModule: return "InvalidModule";
    case ErrorKind::BadInput: return "BadInput";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace qcjt
