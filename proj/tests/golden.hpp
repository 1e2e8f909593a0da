#pragma once

#include <string>
#include <vector>

// Runs the CLI binary over the golden corpus:
//   <dir>/NAME.expr + NAME.out     evaluated with --precision 15
//   <dir>/malformed/NAME.expr      first line "# error at L:C"; must exit 2
//                                  and name that position on stderr
namespace golden {

struct Outcome {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct Summary {
  std::vector<Outcome> cases;
  std::size_t wellformed = 0;
  std::size_t malformed = 0;
  bool all_ok() const;
};

struct Run {
  int status = -1;  // exit code, -1 if the process did not exit normally
  std::string out;
  std::string err;
};

Run run_process(const std::string& cli, const std::vector<std::string>& args);

// Bools and integers compare byte for byte; anything else compares its text
// skeleton exactly and each number within `atol`.
bool outputs_match(const std::string& got, const std::string& expected, double atol, std::string* why = nullptr);

Summary run(const std::string& cli, const std::string& dir);

}  // namespace golden
