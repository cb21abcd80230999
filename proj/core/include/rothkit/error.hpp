#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rothkit {

enum class ErrorKind {
  InvalidGroup,
  GroupMismatch,
  DimensionMismatch,
  Unsupported,
  Domain,
  Precondition,
  InternalConsistency,
  SamplingFailure,
  NoRegularRadius,
  Budget,
  Parse,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Single exception type for the library; callers switch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

inline void require(bool condition, ErrorKind kind, const std::string& message) {
  if (!condition) fail(kind, message);
}

}  // namespace rothkit
