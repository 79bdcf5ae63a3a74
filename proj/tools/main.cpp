#include <iostream>
#include <string>
#include <vector>

#include "eicat/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return eicat::run_cli(args, std::cout, std::cerr);
}
