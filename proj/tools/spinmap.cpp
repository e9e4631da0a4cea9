#include "spinmap/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return spinmap::cli::run(argc, argv, std::cout, std::cerr);
}
