#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace aybe {

// Runs one CLI invocation (without the program name). Exit codes:
// 0 success, 1 a requested check failed, 2 usage or precondition error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace aybe
