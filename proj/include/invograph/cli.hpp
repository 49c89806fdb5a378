#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace invograph::cli {

// Exit codes, one per failure class.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitParse = 3;
inline constexpr int kExitPrecondition = 4;
inline constexpr int kExitDegenerate = 5;
inline constexpr int kExitIo = 6;

// Runs one command line (args[0] is the program name). Diagnostics go to
// `err` as a single line per failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace invograph::cli
