#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace toric {

enum class ErrorCode {
  // input and validation failures
  ParseError,
  BadNumber,
  RayNotPrimitive,
  DuplicateRay,
  InvalidCone,
  NotSmoothComplete,
  NegativeKappa,
  NotAmple,
  ShapeMismatch,
  ZeroVector,
  ZeroDirection,
  ZeroRelation,
  DuplicateMarker,
  NoCurves,
  InvalidDegree,
  // failures during a computation on accepted input
  OutsideSupport,
  NotComplete,
  NotRepresentable,
  NoRelation,
  NotSmoothCone,
  NotARelation,
  Unbounded,
  EmptyPolytope,
  InternalContradiction,
};

std::string_view error_code_name(ErrorCode code);

/// True for codes that describe bad input rather than a failed computation.
bool is_validation_error(ErrorCode code);

class ToricError : public std::runtime_error {
 public:
  ToricError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace toric
