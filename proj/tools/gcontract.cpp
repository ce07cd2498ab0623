#include <iostream>
#include <string>
#include <vector>

#include "gcontract/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return gcontract::run_cli(args, std::cin, std::cout, std::cerr);
}
