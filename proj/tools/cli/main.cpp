#include <iostream>
#include <string>
#include <vector>

#include "blaschke_lab_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return blaschke_lab::cli::run(args, std::cout, std::cerr);
}
