#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pathfree {

/// Runs the command line `args` (without the program name). Returns the exit
/// status: 0 ok, 1 verification or contract failure, 2 usage error.
int run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err);

} // namespace pathfree
