#include <iostream>

#include "usm/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return usm::run_cli(args, std::cout, std::cerr);
}
