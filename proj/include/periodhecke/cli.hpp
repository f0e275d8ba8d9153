#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace periodhecke {

/// Runs one command line (without the program name). Results go to `out`,
/// usage text and structured errors to `err`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace periodhecke
