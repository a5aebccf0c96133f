#pragma once

#include <iosfwd>

namespace copslab::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kInputError = 2, kBudgetExceeded = 3 };

/// Entry point for the `copslab` tool: solve, verify, simulate, gen.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace copslab::cli
