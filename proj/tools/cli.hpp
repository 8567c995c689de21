#pragma once

#include <string>
#include <vector>

namespace zc {

/// Command-line front end. `args` is the full argv including the program
/// name. Returns the process exit status: 0 on success, 2 on validation
/// errors, 1 on runtime failures.
int run_cli(const std::vector<std::string>& args);

}  // namespace zc
