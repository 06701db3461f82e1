#include <iostream>
#include <string>
#include <vector>

#include "repkit/clicore.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return repkit::cli::run(args, std::cout, std::cerr);
}
