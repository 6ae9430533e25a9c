#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rigidity::cli {

enum ExitCode : int { kPass = 0, kViolation = 1, kUsage = 2 };

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`; `in` is read when the input path is "-" or absent.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace rigidity::cli
