#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rmk::cli {

/// Runs one command line (program name excluded). Writes the result document
/// to `out` and diagnostics to `err`. Returns 0 on success, 1 when a check
/// fails, 2 on usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rmk::cli
