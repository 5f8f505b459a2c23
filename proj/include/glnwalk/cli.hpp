#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace glnwalk::cli {

// Runs one CLI invocation. Returns 0 on success, 1 on domain errors
// (precondition violations, parse failures in inputs), 2 on usage errors.
// JSON results go to `out`, diagnostics to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace glnwalk::cli
