#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace veechfib {

// Runs one command line (without the program name). Returns 0 on success, 1 on
// a mathematical inconsistency, 2 on invalid arguments.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace veechfib
