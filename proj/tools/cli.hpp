#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace crystal_cli {

// Runs the command line given the argv tail (no program name).
// Exit status: 0 success, 1 verification failure, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace crystal_cli
