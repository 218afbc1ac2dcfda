#include <iostream>
#include <string>
#include <vector>

#include "ucf/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ucf::cli::main_entry(args, std::cout, std::cerr);
}
