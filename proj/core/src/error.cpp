#include "rothkit/error.hpp"

namespace rothkit {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidGroup: return "invalid-group";
    case ErrorKind::GroupMismatch: return "group-mismatch";
    case ErrorKind::DimensionMismatch: return "dimension-mismatch";
    case ErrorKind::Unsupported: return "unsupported-operation";
    case ErrorKind::Domain: return "domain-error";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::InternalConsistency: return "internal-consistency";
    case ErrorKind::SamplingFailure: return "sampling-failure";
    case ErrorKind::NoRegularRadius: return "no-regular-radius";
    case ErrorKind::Budget: return "budget-exceeded";
    case ErrorKind::Parse: return "parse-error";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace rothkit
