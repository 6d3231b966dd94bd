#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mstable::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitDomain = 65;
inline constexpr int kExitInternal = 70;

/// Runs one subcommand; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args);

}  // namespace mstable::cli
