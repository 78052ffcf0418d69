#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bklab {

/// Runs one command line (args excludes the program name). Exit codes:
/// 0 success, 1 honest negative result, 2 usage or input error.
int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                std::ostream& err);

}  // namespace bklab
