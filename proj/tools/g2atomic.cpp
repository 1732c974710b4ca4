#include <iostream>
#include <string>
#include <vector>

#include "g2atomic/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return g2::cli::run(args, std::cout, std::cerr);
}
