#include <cstdlib>
#include <iostream>

#include <unistd.h>

#include "commands.hpp"

int main(int argc, char** argv) {
  const bool colour = std::getenv("NO_COLOR") == nullptr && isatty(STDOUT_FILENO);
  return distcol::cli::run(argc, argv, {std::cout, std::cerr, colour});
}
