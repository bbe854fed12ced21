#include <iostream>

#include "logbehave/cli.hpp"

int main(int argc, char** argv) {
  return logbehave::cli::run(argc, argv, std::cout, std::cerr);
}
