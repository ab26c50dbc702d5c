#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sumset::cli {

// Parses and dispatches one command line (without the program name).
// Output goes to `out`, diagnostics to `err`.
//
// Exit codes:
//   0  success / positive verdict
//   1  negative verdict (set fails verification, suite found witnesses)
//   2  usage error (bad flags, unparsable group or set)
//   3  budget or size limit exceeded
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace sumset::cli
