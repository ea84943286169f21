#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ciore::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;  // refuted, invalid, check failed
inline constexpr int kExitUnknown = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitParse = 65;
inline constexpr int kExitInternal = 70;

/// Runs one command. `args` excludes the program name. `input` feeds
/// check-proof when it reads standard input.
int run(const std::vector<std::string>& args, std::istream& input, std::ostream& out, std::ostream& err);

}  // namespace ciore::cli
