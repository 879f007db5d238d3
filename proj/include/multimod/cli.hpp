#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace multimod::cli {

// Exit codes: 0 holds / succeeded / matched, 1 fails / mismatched, 2 input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFails = 1;
inline constexpr int kExitInputError = 2;

// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace multimod::cli
