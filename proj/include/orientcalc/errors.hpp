#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace orientcalc {

/// Machine-readable failure categories. The CLI prints the kind name and
/// maps kinds onto exit codes.
enum class ErrorKind {
  UndeclaredVariable,
  RingMismatch,
  NotHomogeneous,
  NotAUnit,
  NonTerminating,
  TruncationTooSmall,
  NotSymmetric,
  NotInvertible,
  NoSolution,
  AmbiguousSolution,
  LayoutInconsistent,
  InsufficientCoefficients,
  InvalidRing,
  ExponentOverflow,
  ParseError,
  ConfigError,
};

std::string_view kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace orientcalc
