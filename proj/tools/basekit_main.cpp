#include <iostream>
#include <string>
#include <vector>

#include "basekit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return basekit::run_cli(args, std::cout, std::cerr);
}
