#pragma once

#include <iosfwd>

#include "run_spec.hpp"

namespace chaplygin::cli {

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kUsage = 2,
    kRegime = 3,
};

/// Parses argv (flags, optional run file, CHAPLYGIN_FORMAT) and dispatches.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Runs one parsed command; reports on `out`, diagnostics on `err`.
int execute(const RunSpec& spec, std::ostream& out, std::ostream& err);

} // namespace chaplygin::cli
