#include <iostream>

#include "qi/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qi::run_cli(args, std::cout, std::cerr);
}
