#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gstruve::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;

// Executes one subcommand (eval, zeros, radius, bounds, verify). `args`
// excludes the program name. Writes exactly one record to `out` on success
// and diagnostics to `err`. Returns 0, 2 (usage) or 3 (numerical failure or
// failed verification).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gstruve::cli
