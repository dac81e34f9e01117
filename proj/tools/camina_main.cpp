#include <iostream>

#include "camina/cli.hpp"

int main(int argc, char** argv) {
  return camina::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
