// Command-line entry point; all behavior lives in foldlp/cli.hpp.

#include <iostream>
#include <string>
#include <vector>

#include "foldlp/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return foldlp::run_cli(std::move(args), std::cout, std::cerr);
}
