#include "tristrat/error.hpp"

namespace tristrat {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Parse: return "parse error";
    case ErrorKind::Validation: return "validation error";
    case ErrorKind::SubsetViolation: return "subset violation";
    case ErrorKind::ZeroMass: return "zero-mass error";
    case ErrorKind::EmptySet: return "empty-set error";
    case ErrorKind::Usage: return "usage error";
    case ErrorKind::Capacity: return "capacity error";
    case ErrorKind::Gate: return "clique-too-small";
  }
  return "error";
}

void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace tristrat
