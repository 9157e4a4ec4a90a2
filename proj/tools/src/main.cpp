#include <iostream>
#include <string>
#include <vector>

#include "maxmaxflow_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return maxmaxflow::cli::dispatch(args, std::cout, std::cerr);
}
