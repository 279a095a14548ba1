#include <iostream>
#include <string>
#include <vector>

#include "aqstar/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return aqstar::cli::run(args, std::cout, std::cerr);
}
