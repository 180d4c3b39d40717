#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace strongcolor {

// Full command-line front end. args excludes the program name. Exit codes:
// 0 success, 2 usage error, 3 runtime error, 4 coloring retries exhausted.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace strongcolor
