#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rtw {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,         // claims hold / no witness
  kExitInput = 1,      // bad arguments, unreadable or malformed input
  kExitViolation = 2,  // a certifier found a witness or a checked inequality failed
  kExitBudget = 3,     // exact search ran out of its node budget
};

inline constexpr const char* kToolVersion = "0.1.0";

/// Runs the `rtw` command line with `args` (program name excluded). Primary
/// results go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Hex SHA-256 of a byte string.
std::string sha256_hex(const std::string& bytes);

}  // namespace rtw
