#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "paramat/matrix.hpp"

namespace paramat {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInput = 3;

/// Resolves l3 | g3 | k3 | cl2 | ln:<n> | gn:<n> | file:<path>. Relative file
/// paths that do not exist are retried under $PARAMAT_MATRIX_PATH.
Matrix resolve_logic(const std::string& selector);

/// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace paramat
