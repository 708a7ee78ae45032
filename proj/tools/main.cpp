#include <iostream>

#include "scoreplay/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return scoreplay::run(args, std::cout, std::cerr);
}
