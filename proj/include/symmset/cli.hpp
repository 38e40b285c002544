#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symmset {

// Runs one CLI invocation. `args` excludes the program name.
// Exit codes: 0 success, 1 domain error, 2 usage error, 3 internal error.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace symmset
