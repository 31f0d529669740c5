#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace quatwick {

/// Runs the command line `args` (without the program name). Returns the
/// process exit code: 0 success, 1 a failed check, 2 invalid input,
/// 3 a resource bound exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quatwick
