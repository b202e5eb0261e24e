#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wick {

// Dispatches one CLI invocation (without the program name).
// Exit codes: 0 ok, 1 failed oracle check, 2 parse error, 3 model error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wick
