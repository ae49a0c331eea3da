#include <iostream>
#include <string>
#include <vector>

#include "qres/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return qres::cli::run(args, std::cout, std::cerr);
}
