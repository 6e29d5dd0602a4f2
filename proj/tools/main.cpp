#include <iostream>
#include <string>
#include <vector>

#include "gpath/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return gpath::cli::run(args, std::cout, std::cerr, std::cin);
}
