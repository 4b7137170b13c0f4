#include <iostream>

#include "mph/cli/cli.hpp"

int main(int argc, char** argv) {
  return mph::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
