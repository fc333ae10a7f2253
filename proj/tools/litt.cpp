#include <iostream>
#include <string>
#include <vector>

#include "litt/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return litt::cli::run(args, std::cout, std::cerr);
}
