#include <iostream>

#include "kbg/cli.hpp"

int main(int argc, char** argv) {
  return kbg::cli_main(argc, argv, std::cin, std::cout, std::cerr);
}
