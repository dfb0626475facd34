#include <iostream>

#include "sylow/cli.hpp"

int main(int argc, char** argv) {
  return sylow::run_cli(std::vector<std::string>(argv + 1, argv + argc),
                        std::cout, std::cerr);
}
