#include "lrank/error.hpp"

namespace lrank {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyRoots: return "EmptyRoots";
    case ErrorCode::UnreachableVertex: return "UnreachableVertex";
    case ErrorCode::EmptyFactor: return "EmptyFactor";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::InvalidDecomposition: return "InvalidDecomposition";
    case ErrorCode::VertexNotInDecomposition: return "VertexNotInDecomposition";
    case ErrorCode::LayerOutOfRange: return "LayerOutOfRange";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::UncoloredVertex: return "UncoloredVertex";
    case ErrorCode::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NotEdgeMaximal: return "NotEdgeMaximal";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::BandCollision: return "BandCollision";
    case ErrorCode::BandOverflow: return "BandOverflow";
    case ErrorCode::MismatchedEll: return "MismatchedEll";
    case ErrorCode::InvalidCertificate: return "InvalidCertificate";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace lrank
