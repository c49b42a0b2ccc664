#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace posetrep {

// Full command-line surface: parses args (without the program name),
// dispatches one subcommand, writes its report to out and diagnostics to
// err. Returns the process exit code: 0 success, 1 input error, 2 violated
// precondition, 3 overflow, 4 budget exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace posetrep
