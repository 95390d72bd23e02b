#include <iostream>

#include "gamma/cli.hpp"

int main(int argc, char** argv) {
  return cli::run(argc, argv, std::cin, std::cout, std::cerr);
}
