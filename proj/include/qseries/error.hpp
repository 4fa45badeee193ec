#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qseries {

enum class ErrorKind {
  EmptyWindow,
  NotInvertible,
  PoleAtZero,
  OutOfWindow,
  NonTruncatable,
  UnknownIdentity,
  PoleAtRequestedPoint,
  InsufficientWindow,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so that
/// callers (tests, the CLI) can branch on the contract violated rather than on
/// message text.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qseries
