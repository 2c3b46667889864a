#include <iostream>

#include "homcat/cli.hpp"

int main(int argc, char** argv) {
  return homcat::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
