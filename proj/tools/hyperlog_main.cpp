#include <iostream>
#include <string>
#include <vector>

#include "hyperlog/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return hyperlog::run_cli(args, std::cout, std::cerr);
}
