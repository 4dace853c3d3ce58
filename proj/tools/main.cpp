#include <iostream>

#include "ccc/cli.hpp"

int main(int argc, char** argv) {
  return ccc::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
