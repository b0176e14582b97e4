#include <iostream>

#include "annulus/cli.hpp"

int main(int argc, char** argv) {
  return annulus::cli::run(argc, argv, std::cout, std::cerr);
}
