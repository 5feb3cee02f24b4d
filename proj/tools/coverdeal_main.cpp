#include <iostream>

#include "coverdeal/cli.hpp"

int main(int argc, char** argv) {
  return coverdeal::cli::run_cli(argc, argv, std::cout, std::cerr);
}
