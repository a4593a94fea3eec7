#include <iostream>

#include "infcc/cli.hpp"

int main(int argc, char** argv) {
  return infcc::cli::run({argv, argv + argc}, std::cout, std::cerr);
}
