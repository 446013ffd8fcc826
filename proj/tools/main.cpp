#include <iostream>
#include <string>
#include <vector>

#include "reptri/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return reptri::cli::run(args, std::cout, std::cerr);
}
