#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace civar::cli {

// Runs one invocation (args exclude the program name); writes the report to
// out and diagnostics to err. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace civar::cli
