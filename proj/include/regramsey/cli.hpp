#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace regramsey {

/// Exit codes shared by every subcommand.
enum ExitCode : int
{
    exit_pass = 0,        ///< PASS or a plain result
    exit_fail = 1,        ///< FAIL or a counterexample
    exit_usage = 2,       ///< bad arguments or parameters out of range
    exit_budget = 3       ///< budget or cap ran out before an answer
};

/// Runs the command line `args` (without the program name). Human output
/// goes to `out`, diagnostics to `err`.
auto run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;

} // namespace regramsey
