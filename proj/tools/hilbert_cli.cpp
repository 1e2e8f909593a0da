#include <unistd.h>

#include <iostream>
#include <string>
#include <vector>

#include "hilbert/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hilbert::cli::run_cli(args, std::cin, std::cout, std::cerr, isatty(STDIN_FILENO) != 0);
}
