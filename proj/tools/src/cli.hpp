#pragma once

#include <iosfwd>

namespace tvalue::cli {

enum ExitCode : int { kPass = 0, kVerificationFailure = 1, kUsage = 2, kIo = 3 };

/// Entry point of the tvalue_lab tool. Normal output goes to `out`,
/// diagnostics to `err`; the return value is the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tvalue::cli
