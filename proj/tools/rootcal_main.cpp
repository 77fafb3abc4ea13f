#include <iostream>

#include "rootcal/cli.hpp"

int main(int argc, char** argv) {
  return rootcal::run_cli(argc, argv, std::cout, std::cerr);
}
