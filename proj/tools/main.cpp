#include <iostream>

#include "setumbral_cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return setumbral::cli::run_cli(args, std::cout, std::cerr);
}
