#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace birkhoff::cli {

enum ExitCode : int {
    kOk = 0,
    kUnknownSubcommand = 1,
    kInvalidParameters = 2,
    kIoFailure = 3,
    kAssertionFailure = 4,
};

const char* version();

/**
 * Runs one command line. `args` excludes the program name. JSON goes to the
 * --out file when given, else to `out`; diagnostics go to `err`.
 *
 * The seed comes from --seed, else from `seed_env` (the SEED variable), else 0.
 */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const char* seed_env = nullptr);

}  // namespace birkhoff::cli
