#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lie::cli {

/// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kRefused = 2;
inline constexpr int kInternal = 3;

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lie::cli
