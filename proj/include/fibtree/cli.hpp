#pragma once

#include <iosfwd>

namespace fibtree::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kCertificationFailure = 2, kOracleDisagreement = 3 };

/// Runs one command line (argv[0] is the program name) and writes the record
/// to `out`, diagnostics to `err`. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fibtree::cli
