#ifndef TORCOX_CLI_HPP
#define TORCOX_CLI_HPP

#include <string>
#include <vector>

namespace torcox {

/**
 * Outcome of one command-line invocation.  Exit codes:
 *   0  success (including --help)
 *   2  command-line or document parse error
 *   3  the input fan fails validation
 *   4  a divisor or subgroup label is not defined in the document
 *   5  a subgroup with dependent generators was used where a grading
 *      basis is required
 *   6  a tower chain is not increasing
 */
struct CliResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

/** Entry point shared by the torcox binary and the in-process tests. */
CliResult run_cli(const std::vector<std::string>& args);

}  // namespace torcox

#endif
