#include <iostream>
#include <string>
#include <vector>

#include "wick/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return wick::run_command(args, std::cout, std::cerr);
}
