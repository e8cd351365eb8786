#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace psb {

// Dispatches one CLI invocation. Exit codes: 0 success, 1 verification
// failure, 2 usage error.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace psb
