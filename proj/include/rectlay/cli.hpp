#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rectlay {

// Runs one command line (without the program name). Returns the exit
// code: 0 success or positive answer, 1 negative answer, 2 bad input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rectlay
