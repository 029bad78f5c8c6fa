#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace xh {

/// Exit codes shared by every subcommand.
inline constexpr int kExitUsage = 64;
inline constexpr int kExitCap = 65;

/// Runs one command line (without the program name). Normal output goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace xh
