#include <iostream>

#include "ras/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ras::cli::run(args, std::cout, std::cerr);
}
