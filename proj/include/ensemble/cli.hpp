#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ensemble::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitSearchFailed = 2;  // verification failure or ambiguous marking
inline constexpr int kExitUsage = 64;
inline constexpr int kExitDataError = 65;

inline constexpr int kSchemaVersion = 1;

// Runs one command line (args[0] is the program name). Normal output goes
// to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ensemble::cli
