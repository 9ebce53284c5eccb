#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace phin::cli {

/// Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 the input
/// could not be parsed or validated.
constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

/// Runs the command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace phin::cli
