#include <iostream>

#include "gqt/cli.hpp"

int main(int argc, char** argv) {
  return gqt::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
