#pragma once

// Command-line front end. run() is separate from main() so tests can drive it
// in-process.

#include <iosfwd>
#include <string>
#include <vector>

namespace su3::cli {

enum ExitCode : int { kOk = 0, kInternal = 1, kInputError = 2, kBudgetExceeded = 3 };

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace su3::cli
