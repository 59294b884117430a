#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace homok::cli {

/// Runs one command line (without the program name). Returns the exit code:
/// 0 success, 1 computation error or failed verification, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace homok::cli
