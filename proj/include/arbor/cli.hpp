#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace arbor {

/// Runs the command line `args` (without the program name). Answers and
/// reports go to `out`, diagnostics to `err`. Returns the process exit status:
/// 0 for any answer including NO, 1 for errors and failing selftests, and
/// CLI11's nonzero codes for usage errors.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arbor
