#include <iostream>
#include <string>
#include <vector>

#include "glyphnet/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return glyphnet::cli::run(args, std::cout, std::cerr);
}
