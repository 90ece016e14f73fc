#include <iostream>

#include "cli/run.hpp"

int main(int argc, char** argv) {
  return netmed::cli::main(argc, argv, std::cout, std::cerr);
}
