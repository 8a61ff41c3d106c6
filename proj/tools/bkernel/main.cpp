#include "bkernel/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  int exit_code = 0;
  const auto config = bkernel::parse_args(argc, argv, std::cout, std::cerr, exit_code);
  if (!config) return exit_code;
  return bkernel::run(*config, std::cout, std::cerr);
}
