#include <iostream>

#include "gznt/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gznt::run_cli(args, std::cout, std::cerr);
}
