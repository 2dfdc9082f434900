#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace amalgam {

enum class ErrorKind {
  MixedRings,
  ZeroDivisor,
  CapabilityMissing,
  PrecisionExhausted,
  NotAUnit,
  ZeroInput,
  NotInIdeal,
  FlagsViolated,
  PreimageUndefined,
  NotEnumerable,
  NotSquare,
  SizeCap,
  InvalidDescriptor,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it to an exit status.
class AlgebraError : public std::runtime_error {
 public:
  AlgebraError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw AlgebraError(kind, what);
}

}  // namespace amalgam
