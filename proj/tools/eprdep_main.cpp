#include <iostream>
#include <string>
#include <vector>

#include "eprdep/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return eprdep::run_cli(args, std::cout, std::cerr);
}
