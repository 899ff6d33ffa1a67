#include <iostream>
#include <string>
#include <vector>

#include "seqlrc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return seqlrc::run(args, std::cout, std::cerr);
}
