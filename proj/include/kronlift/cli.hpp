#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kronlift {

enum ExitCode : int {
    ExitOk = 0,
    ExitMalformed = 2,
    ExitPrecondition = 3,
    ExitInternal = 4,
};

/// Command-line driver. args excludes the program name. The JSON result goes
/// to out (one document, sorted keys, trailing newline); diagnostics to err.
int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out,
        std::ostream &err);

} // namespace kronlift
