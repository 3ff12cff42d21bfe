#include <iostream>

#include "altpath/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return altpath::run_cli(args, std::cout, std::cerr);
}
