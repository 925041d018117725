#include <iostream>
#include <string>
#include <vector>

#include "plethyst/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return plethyst::cli::run(args, std::cout, std::cerr);
}
