#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace knotmosaic::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitMismatch = 4;

// Runs one command line (without the program name). `in` backs the "-" file
// argument.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace knotmosaic::cli
