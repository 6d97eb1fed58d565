#include <iostream>
#include <string>
#include <vector>

#include "quadpre/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return quadpre::dispatch(args, std::cout, std::cerr);
}
