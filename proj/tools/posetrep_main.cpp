#include <iostream>
#include <string>
#include <vector>

#include "posetrep/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return posetrep::run_cli(args, std::cout, std::cerr);
}
