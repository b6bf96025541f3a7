#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ddom {

/// Entry point of the `ddom` tool. `args` excludes the program name.
/// Exit codes: 0 success or "true", 1 "false" from query, 2 usage or input
/// error, 3 unknown or unusable vertex, 4 verification mismatch.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ddom
