#include <iostream>
#include <string>
#include <vector>

#include "mediagame/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return mediagame::cli::run(args, std::cout, std::cerr);
}
