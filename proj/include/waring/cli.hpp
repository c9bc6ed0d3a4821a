#pragma once

#include <ostream>
#include <vector>
#include <string>

namespace waring {

// Full command-line driver. Exit codes: 0 success, 1 input error,
// 2 internal invariant violation.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace waring
