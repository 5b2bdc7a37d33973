#pragma once

#include <string>
#include <vector>

namespace hff {

/// Dispatches the command-line interface. Returns the process exit code:
/// 0 success, 2 config/parse error, 3 family not regular, 1 other failures.
int run_cli(const std::vector<std::string>& args);

}  // namespace hff
