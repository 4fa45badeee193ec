#include <iostream>

#include "qseries/cli.hpp"

int main(int argc, char** argv) {
  return qseries::cli_main(argc, argv, qseries::Registry::standard(), std::cout, std::cerr);
}
