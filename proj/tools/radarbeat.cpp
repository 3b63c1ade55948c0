#include <iostream>
#include <string>
#include <vector>

#include "radarbeat/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return radarbeat::cli::main(args, std::cout, std::cerr);
}
