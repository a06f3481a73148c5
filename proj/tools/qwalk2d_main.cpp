#include <iostream>
#include <vector>

#include "qwalk/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return qwalk::run_cli(args, std::cout, std::cerr);
}
