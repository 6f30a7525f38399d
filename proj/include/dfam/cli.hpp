#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dfam::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 1;
inline constexpr int kExitVerificationFailed = 2;
inline constexpr int kExitBudgetExhausted = 3;

/// Runs one command line (without the program name); returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dfam::cli
