#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tpa {

// Executes one command line (args exclude the program name). Reports and
// emitted bundles go to `out`, diagnostics to `err`. Returns the process
// exit code: 0 success / all checks pass, 1 a check failed (a report with
// the witness is on stdout), 2 usage or input error, 3 internal invariant
// breach.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace tpa
