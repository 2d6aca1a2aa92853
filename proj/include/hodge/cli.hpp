#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hodge {

// Runs the command-line interface. Exit codes: 0 when everything computed
// and every theorem check passed; 2 when a theorem check failed (treated as
// an implementation defect); 1 for input or environment errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hodge
