#include <iostream>
#include <string>
#include <vector>

#include "qsing/cli.hpp"

int main(int argc, char **argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qsing::cli::run(args, std::cout, std::cerr);
}
