#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ccc::cli {

/// Exit codes: 0 success, 1 domain error (infeasible parameters, constraint
/// violation reported by `check`, corrupt codeword), 2 usage, I/O or parse
/// error.
enum ExitCode : int { kOk = 0, kDomain = 1, kIo = 2 };

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ccc::cli
