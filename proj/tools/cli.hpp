#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace frieze::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Machine-readable JSON
/// goes to `out`, human-readable diagnostics to `err`; a file argument of
/// "-" reads from `in`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace frieze::cli
