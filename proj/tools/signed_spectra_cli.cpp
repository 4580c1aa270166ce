#include <iostream>
#include <vector>

#include "signed_spectra/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return signed_spectra::cli::run(args, std::cin, std::cout, std::cerr);
}
