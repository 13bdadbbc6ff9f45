#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quot {

/// Runs the command line against the given streams. Returns the process exit
/// code: 0 success, 1 verification or computation failure, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quot
