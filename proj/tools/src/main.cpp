#include <iostream>
#include <string>
#include <vector>

#include "econamp/cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return econamp::cli::run(args, std::cout, std::cerr);
}
