#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ambit::cli {

/// Runs one command line (without the program name). The report, or a
/// machine-readable error object, is written to `out` as a single JSON
/// document. Returns the process exit code: 0 on success (an empty
/// identification region is a finding, not a failure), 1 on data or
/// validation errors, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace ambit::cli
