#include <iostream>
#include <string>
#include <vector>

#include "frinkmetric/cli.hpp"

int main(int argc, char** argv) {
  return frinkmetric::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
