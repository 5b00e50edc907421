#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace platen::cli {

// Runs the command line given as `args` (program name excluded), writing
// results to `out` and diagnostics to `err`. Returns the process exit code:
// 0 success, 1 validation failure, 2 usage or parse errors. Output is
// deterministic for a fixed argument vector and fixed input files.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace platen::cli
