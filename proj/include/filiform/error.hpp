#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace filiform {

enum class ErrorCode {
  DivisionByZero,
  InvalidParameter,
  InvalidField,
  FieldMismatch,
  DimensionMismatch,
  NotClosed,
  ParseError,
  ValidationFailed,
  CharacteristicTwo,
  ClosednessFailed,
  InvalidIndices,
  NoLeadingTerm,
  InvalidLambda,
  FieldNotOrdered,
  ShapeMismatch,
};

std::string_view to_string(ErrorCode code);

// Every failure in the library surfaces as this one exception type; callers
// branch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace filiform
