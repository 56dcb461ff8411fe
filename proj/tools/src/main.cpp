#include <iostream>

#include "polyspec/cli.hpp"

int main(int argc, char** argv) {
  return polyspec::cli::main_entry(argc, argv, std::cout, std::cerr);
}
