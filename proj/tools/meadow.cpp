#include <iostream>
#include <string>
#include <vector>

#include "meadow/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return meadow::run_cli(args, std::cout, std::cerr);
}
