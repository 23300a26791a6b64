#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace para::cli {

// Runs one CLI invocation (args exclude the program name) against the
// given streams. Exit codes: 0 ok, 1 verification failure, 2 usage error.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace para::cli
