#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dsign {

enum class ErrorKind {
  BadInput,
  DegenerateSign,
  SingularInput,
  SingularOperator,
  DimensionOne,
  SignInconsistent,
  ModeMismatch,
  ZeroMap,
  BadSplit,
  CenterTooLarge,
  DegenerateCenter,
  NotIdempotent,
  NoHyperplane,
  NotEQuadratic,
  NonUniqueIdempotent,
  BadDimension,
  BlockMismatch,
  NotDivision,
  NoImaginaryUnit,
  NonConvergence,
  ZeroQuaternion,
  NotSpecialOrthogonal,
  FactorizationFailed,
  VerificationFailed,
};

std::string_view to_string(ErrorKind kind);

/// True for failures caused by floating-point collapse rather than by the input.
bool is_numerical(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace dsign
