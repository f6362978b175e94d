#include <iostream>
#include <string>
#include <vector>

#include "ptqao/cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ptqao::cli::run_app(args, std::cout, std::cerr);
}
