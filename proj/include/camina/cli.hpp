#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace camina {

/// Runs the command line (without the program name). Returns the exit
/// code: 0 ok, 2 some check failed, 1 operational error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace camina
