#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace widthlab::cli {

/// Runs one command line (without the program name). Returns 0 when a verdict
/// was produced, 1 on bad input, 2 on internal failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace widthlab::cli
