#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace spinmap {

enum class ErrorKind {
  DivisionByZero,
  Parse,
  Singular,
  Inconsistent,
  ShapeMismatch,
  DigitOutOfRange,
  SpinOutOfRange,
  ParityMismatch,
  IndexOutOfRange,
  LimitExceeded,
  Overflow,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Domain error raised by every module. The kind identifies the failed
/// precondition; the message carries the offending values.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace spinmap
