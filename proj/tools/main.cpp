#include <iostream>
#include <string>
#include <vector>

#include "kaczmarz/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return kaczmarz::cli::run(args, std::cout, std::cerr);
}
