#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace matspace::cli {

/// Runs one CLI command. args excludes the program name. The JSON report
/// goes to `out`; human-readable commentary and errors go to `err`.
/// Exit codes: 0 success, 1 error, 2 expectation mismatch under
/// --strict-expect.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace matspace::cli
