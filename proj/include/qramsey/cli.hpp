#pragma once

// Command-line front end. Exit codes: 0 success or pass, 1 verification
// failure, 2 usage or domain error.

#include <ostream>
#include <string>
#include <vector>

namespace qramsey::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qramsey::cli
