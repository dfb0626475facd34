#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sylow {

// Runs the command line given args without the program name.
// Exit codes: 0 success, 1 check/consistency failure, 2 usage or parse
// error, 3 guard violation.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace sylow
