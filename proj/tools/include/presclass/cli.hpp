#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace presclass::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// Runs one command line (without the program name). Returns 0 on success,
// 1 when a verification fails, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace presclass::cli
