#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sigma_roots {

enum ExitCode : int {
    kExitOk = 0,
    kExitParse = 2,
    kExitPrecondition = 3,
    kExitBudget = 4,
};

/// Entry point of the `sigma-roots` tool. Results go to `out`, diagnostics
/// to `err`.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);
/// Same, with argv[0] implied.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace sigma_roots
