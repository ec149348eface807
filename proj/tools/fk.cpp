#include <iostream>
#include <string>
#include <vector>

#include "fk/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fk::cli_main(args, std::cout, std::cerr);
}
