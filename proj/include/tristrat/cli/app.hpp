#pragma once

#include <iosfwd>

namespace tristrat::cli {

/// Exit statuses of the `tristrat` binary.
enum ExitCode : int {
  kOk = 0,
  kOracleMismatch = 1,
  kInvalid = 2,
  kCapacity = 3,
  kGate = 4,
};

/// Parses argv and runs one subcommand. Human output goes to `out`, errors to
/// `err`; the JSON document goes to the --json path ("-" for `out`).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tristrat::cli
