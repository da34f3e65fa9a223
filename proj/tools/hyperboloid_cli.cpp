#include <iostream>

#include "hyperboloid/cli/commands.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return hyperboloid::cli::run_cli(args, std::cout, std::cerr);
}
