#pragma once

#include <iosfwd>

namespace chroma {

// Exit codes of the command line tool.
enum ExitCode : int { kOk = 0, kNegative = 1, kUsage = 2, kBadInput = 3, kVerifyFailed = 4 };

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace chroma
