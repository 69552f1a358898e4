#include <iostream>

#include "levelplan/cli.hpp"

int main(int argc, char** argv) {
  return levelplan::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
