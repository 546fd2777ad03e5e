#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hypercyclic::cli {

// Stable exit-code contract of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitDisconnected = 3;
inline constexpr int kExitParameter = 4;
inline constexpr int kExitBudget = 5;
inline constexpr int kExitNoConvergence = 6;
inline constexpr int kExitConjectureFails = 10;

/// Runs the tool; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hypercyclic::cli
