#include "qseries/error.hpp"

namespace qseries {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::EmptyWindow: return "EmptyWindow";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::PoleAtZero: return "PoleAtZero";
    case ErrorKind::OutOfWindow: return "OutOfWindow";
    case ErrorKind::NonTruncatable: return "NonTruncatable";
    case ErrorKind::UnknownIdentity: return "UnknownIdentity";
    case ErrorKind::PoleAtRequestedPoint: return "PoleAtRequestedPoint";
    case ErrorKind::InsufficientWindow: return "InsufficientWindow";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

}  // namespace qseries
