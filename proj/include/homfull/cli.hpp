#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace homfull {

/// Exit codes of the command-line tool.
inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitError = 2;

/// Runs the tool on `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace homfull
