#include <iostream>
#include <string>
#include <vector>

#include "rhythmform/cli.h"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return rhythmform::runCli(args, std::cout, std::cerr);
}
