#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sigwedge::cli {

/// Exit codes: 0 success/true, 1 semantic false, 2 usage or I/O error.
enum ExitCode : int { kOk = 0, kFalse = 1, kError = 2 };

/// Runs one command line. `args` excludes the program name. Missing -i reads
/// `in`; missing -o writes `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace sigwedge::cli
