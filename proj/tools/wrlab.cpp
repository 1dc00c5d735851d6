#include <iostream>

#include "wrlab/cli.hpp"

int main(int argc, char** argv) {
  return wrlab::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
