#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mis3::cli {

enum ExitCode : int {
    kOk = 0,
    kNo = 1,  // decide-vc answered NO
    kInputError = 2,
    kAssertionFailure = 3,
};

/// Runs one command. `args` excludes the program name, e.g.
/// {"solve-mis", "g.dimacs", "--certificate"}. Input "-" reads `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace mis3::cli
