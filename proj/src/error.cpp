#include <alexlab/error.hpp>

namespace alexlab {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DivideByZero: return "DivideByZero";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::InvalidIndex: return "InvalidIndex";
    case ErrorCode::CtxMismatch: return "CtxMismatch";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::IncompatibleLevels: return "IncompatibleLevels";
    case ErrorCode::NotStabilized: return "NotStabilized";
    case ErrorCode::EmptySequence: return "EmptySequence";
    case ErrorCode::NonDivisorClosedLevels: return "NonDivisorClosedLevels";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotAKnot: return "NotAKnot";
    case ErrorCode::NotASeifertMatrix: return "NotASeifertMatrix";
    case ErrorCode::InternalDivisibilityFailure: return "InternalDivisibilityFailure";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace alexlab
