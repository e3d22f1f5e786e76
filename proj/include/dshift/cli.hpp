#pragma once

// Command-line front end: subcommand parsing, problem-file dispatch, and
// report rendering as a human-readable table or deterministic JSON.

#include <iosfwd>
#include <string>
#include <vector>

namespace dshift::cli {

// Returns the process exit code: 0 success, 1 failed verification rows,
// 2 input or schema errors, 3 numerical degeneracy.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dshift::cli
