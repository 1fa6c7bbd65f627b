#include <iostream>
#include <string>
#include <vector>

#include "lexgb/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return lexgb::run_cli(args, std::cout, std::cerr);
}
