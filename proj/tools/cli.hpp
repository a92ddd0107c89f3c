#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fracinv::cli {

// args excludes the program name. Returns the process exit code:
// 0 success, 1 numeric failure (JSON diagnostic on out), 2 bad usage.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fracinv::cli
