#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qwalk {

// Exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitIoError = 3;

/// Entry point behind the qwalk2d executable. `args` excludes the program
/// name. Normal output goes to `out`, diagnostics to `err`; the return
/// value is the process exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace qwalk
