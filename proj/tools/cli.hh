#ifndef CONFLICTCOL_CLI_HH
#define CONFLICTCOL_CLI_HH

#include <iosfwd>
#include <string>
#include <vector>

namespace conflictcol
{
    /// Exit codes shared by every subcommand.
    enum ExitCode : int
    {
        exit_success = 0,              // colourable, valid, determined
        exit_negative = 1,             // uncolourable, invalid, randomized failure
        exit_error = 2                 // usage, parse or budget error
    };

    /// Runs one command line (without the program name).
    auto run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;
}

#endif
