#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace repkit::cli {

// Full command-line front end; returns the process exit code.
// 0: success.  2: domain error (its name is carried in the report).
// 3: malformed input or usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace repkit::cli
