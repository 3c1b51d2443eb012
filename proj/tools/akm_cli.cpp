#include <iostream>
#include <string>
#include <vector>

#include "akm/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return akm::cli::run_command(std::move(args), std::cout, std::cerr);
}
