#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace torica::cli {

// Command dispatch. Writes the report to `out`; returns the process exit
// code: 0 success / pass verdicts, 1 failed verdicts, 2 input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace torica::cli
