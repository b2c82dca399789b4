#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace schubert::cli {

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitDomain = 3;
inline constexpr int kExitMismatch = 4;

/// Runs one command line (without the program name), writing results to out
/// and diagnostics to err. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace schubert::cli
