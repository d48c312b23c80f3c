#pragma once

#include <ostream>

namespace linksim::app {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitRuntime = 2;
inline constexpr int kExitIo = 3;

/// Entry point of the `linksim` tool: subcommands evaluate, sweep-users, rank.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace linksim::app
