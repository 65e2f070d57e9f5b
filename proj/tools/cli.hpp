#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dlg2k::cli {

// Process exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1; // runtime or I/O failure, verification mismatch
inline constexpr int exit_usage = 2;   // bad flags or values, invalid base

// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace dlg2k::cli
