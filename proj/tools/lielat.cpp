#include <iostream>

#include "lielat/cli.hpp"

int main(int argc, char** argv) {
  return lielat::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
