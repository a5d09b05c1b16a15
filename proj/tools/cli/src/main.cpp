#include <iostream>

#include "monitor_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return monitor::cli::run_cli(args, std::cout, std::cerr);
}
