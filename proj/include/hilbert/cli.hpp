#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hilbert::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kEvalError = 1;  // evaluation, type, dimension and usage errors
inline constexpr int kSyntaxError = 2;
inline constexpr int kCheckFailed = 3;
inline constexpr int kIoError = 4;

// args excludes the program name. `interactive` turns on the REPL prompt.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
            bool interactive = false);

}  // namespace hilbert::cli
