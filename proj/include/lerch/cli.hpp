#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "lerch/series.hpp"

namespace lerch::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNotConverged = 2;

/// Entry point of the `lerch` tool: subcommands eval, zeta, verify, bench.
/// Results go to `out`, diagnostics to `err`.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "RE" or "RE,IM".
series::Complex parse_complex(std::string_view text);

}  // namespace lerch::cli
