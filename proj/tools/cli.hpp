#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace towertab::cli {

// Runs the command line given as `args` (without the program name).
// Exit codes: 0 success or positive verdict, 1 negative verdict,
// 2 usage / parse / cap error, 3 internal invariant breach.
int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace towertab::cli
