#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sdim::cli {

enum ExitCode { ok = 0, usage = 1, input = 2, budget = 3 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sdim::cli
