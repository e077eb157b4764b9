#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace plurmat::cli {

// Full command-line surface; argv excludes the program name. Returns the
// process exit code: 0 success, 1 usage, 2 domain error, 3 resource
// error. Data goes to out, diagnostics to err.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

} // namespace plurmat::cli
