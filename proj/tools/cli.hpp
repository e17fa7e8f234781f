#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace oprw::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitLimits = 2;

/// Runs one command line (argv[0] excluded). Output goes to `out`,
/// diagnostics to `err`; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oprw::cli
