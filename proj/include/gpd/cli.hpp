#pragma once

// Command-line surface. Exit codes: 0 every assertion passed, 1 a theorem
// assertion failed, 2 parse or semantic error, 3 hypothesis unmet or
// search budget exhausted.

#include <string>
#include <vector>

namespace gpd {

int run_command(const std::vector<std::string>& args);
int run_command(int argc, const char* const* argv);

}  // namespace gpd
