#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gaussdioph::cli {

// Batch command-line surface. Exit codes: 0 success, 2 domain or parse
// error, 3 cross-check failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gaussdioph::cli
