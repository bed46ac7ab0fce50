#include <iostream>
#include <string>
#include <vector>

#include "ppnkit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return ppnkit::run_cli(args, std::cout, std::cerr);
}
