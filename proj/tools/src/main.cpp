#include <iostream>

#include "oddcycle/cli/commands.hpp"

int main(int argc, char** argv) {
  return oddcycle::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
