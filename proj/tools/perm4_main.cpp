#include <iostream>
#include <string>
#include <vector>

#include "perm4/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return perm4::run_cli(args, std::cout, std::cerr);
}
