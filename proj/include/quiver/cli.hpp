#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace quiver::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_invalid = 2;
inline constexpr int exit_inconclusive = 3;

/// Runs one command. `args` excludes the program name. Reports go to `out`,
/// one-line `error: <code>: <message>` diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace quiver::cli
