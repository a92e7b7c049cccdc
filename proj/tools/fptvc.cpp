#include <iostream>
#include <string>
#include <vector>

#include "fptvc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return fptvc::run_cli(args, std::cout, std::cerr);
}
