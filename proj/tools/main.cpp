#include <iostream>

#include "loja/cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return loja::cli::run(args, std::cout, std::cerr);
}
