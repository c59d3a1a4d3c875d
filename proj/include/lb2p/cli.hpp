#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lb2p::cli {

enum ExitCode : int {
    Definitive = 0,  // a definitive verdict or a produced artifact
    Negative = 1,    // INVALID, FAIL
    Usage = 2,       // bad arguments or input; also NOTAPPLICABLE
    Timeout = 3,     // node budget exhausted
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lb2p::cli
