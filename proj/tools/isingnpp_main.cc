#include <iostream>
#include <string>
#include <vector>

#include "isingnpp/cli.h"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return isingnpp::run_cli(args, std::cout, std::cerr);
}
