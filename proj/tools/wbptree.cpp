#include <iostream>

#include "wbptree/cli.hpp"

int main(int argc, char** argv) {
  return wbp::cli_main(argc, argv, std::cout, std::cerr);
}
