#include <iostream>
#include <string>
#include <vector>

#include "akivis/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return akivis::cli::run(args, std::cout, std::cerr);
}
