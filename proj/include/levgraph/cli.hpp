#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace levgraph {

// Runs a command line (without the program name). Returns the process
// exit code: 0 success, 1 verification or resource failure, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace levgraph
