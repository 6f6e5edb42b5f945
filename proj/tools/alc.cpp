#include <iostream>

#include "alc/cli.hpp"

int main(int argc, char** argv) {
  return alc::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
