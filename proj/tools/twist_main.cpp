#include <iostream>
#include <string>
#include <vector>

#include "twist/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return twist::cli::run(args, std::cout, std::cerr);
}
