#pragma once

#include <iosfwd>

namespace zolo {

enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitUsage = 2, kExitNumerical = 3 };

/// Entry point of the `zolo` tool: solve, sweep, asympt, verify.
/// Payload goes to `out`, progress and diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace zolo
