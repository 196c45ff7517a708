#pragma once

#include <iosfwd>

namespace splitnull::cli {

enum ExitCode : int { ok = 0, negative = 1, usage = 2, domain = 3 };

/// Runs one command line. Reports go to `out`, diagnostics to `err`; graph
/// input named "-" is read from standard input.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace splitnull::cli
