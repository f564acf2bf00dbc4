#include <iostream>

#include "cubeloop/cli.hpp"

int main(int argc, char** argv) {
  return cubeloop::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
