#ifndef CIRC_CLI_HPP
#define CIRC_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace circ::cli {

/// Process exit codes shared by every subcommand.
enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kBadArguments = 2,
    kIoFailure = 3,
};

/**
 * Entry point behind the `circ` executable. `args` excludes the program name.
 * Subcommands: classify, verify-family, shed, survey.
 */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace circ::cli

#endif  // CIRC_CLI_HPP
