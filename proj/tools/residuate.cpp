#include <iostream>

#include "residuate/cli.hpp"

int main(int argc, char** argv) {
  return residuate::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
