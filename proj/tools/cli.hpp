#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ratdist::cli {

// Runs one invocation; args exclude the program name. Data goes to out,
// diagnostics and progress to err. Returns 0 when every check passes, 2 on
// a verification failure and 1 on a usage or configuration error.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ratdist::cli
