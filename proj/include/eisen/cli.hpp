#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eisen::cli {

/// Dispatches one subcommand. Data records go to `out` (JSON lines or CSV),
/// diagnostics to `err`. Returns 0 on success, 2 on a precondition
/// violation or bad usage, 1 on an internal error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eisen::cli
