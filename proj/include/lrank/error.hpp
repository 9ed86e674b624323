#pragma once

#include <stdexcept>
#include <string>

namespace lrank {

enum class ErrorCode {
  EmptyRoots,
  UnreachableVertex,
  EmptyFactor,
  UnknownVertex,
  InvalidDecomposition,
  VertexNotInDecomposition,
  LayerOutOfRange,
  TooSmall,
  UncoloredVertex,
  InstanceTooLarge,
  BudgetExceeded,
  NotEdgeMaximal,
  VerificationFailed,
  BandCollision,
  BandOverflow,
  MismatchedEll,
  InvalidCertificate,
  TooLarge,
  Overflow,
  DomainError,
  ParseError,
  InvalidArgument,
};

const char* to_string(ErrorCode code);

// Every module reports failures through this one type; `code()` is the
// machine-readable part, `what()` carries the detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lrank
