#pragma once

#include <stdexcept>
#include <string>

namespace tristrat {

enum class ErrorKind {
  Parse,
  Validation,
  SubsetViolation,
  ZeroMass,
  EmptySet,
  Usage,
  Capacity,
  Gate,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a kind so front ends can map
/// it to an exit status without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace tristrat
