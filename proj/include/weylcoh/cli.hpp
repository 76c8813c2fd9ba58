#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace weylcoh::cli {

enum ExitCode : int { ok = 0, failed = 1, usage = 2, guard = 3 };

/// Runs one command line (args excludes the program name) and returns the
/// exit code.  Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace weylcoh::cli
