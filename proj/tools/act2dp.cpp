#include <iostream>
#include <string>
#include <vector>

#include "act2dp/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return act2dp::cli::run(args, std::cout, std::cerr);
}
