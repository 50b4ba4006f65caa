#include <iostream>

#include "pvarea/cli.hpp"

int main(int argc, char** argv) {
  return pvarea::run_cli(argc, argv, std::cout, std::cerr);
}
