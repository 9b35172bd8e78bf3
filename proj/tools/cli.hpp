#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace riesz::cli {

inline constexpr int kExitHolds = 0;
inline constexpr int kExitFails = 1;
inline constexpr int kExitInputError = 2;

/// Runs one command line (args excludes the program name). Reports go to
/// `out`, diagnostics to `err`. The thread count is read from RIESZ_THREADS.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace riesz::cli
