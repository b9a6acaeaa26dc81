#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qalg::cli {

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`. Returns 0 on success, 1 when a --check fails and 2
/// on usage, parse or elaboration errors.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qalg::cli
