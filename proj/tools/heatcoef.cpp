#include <iostream>
#include <string>
#include <vector>

#include "heatcoef/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return heatcoef::cli::run(args, std::cout, std::cerr);
}
