#pragma once

#include <iosfwd>

namespace ridgenet::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_failure = 1,
    exit_usage = 2,
    exit_io = 3,
    exit_non_admissible = 4,
};

/// Entry point of the `ridgenet` tool; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ridgenet::cli
