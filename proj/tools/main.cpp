#include "signed_spectra/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return signed_spectra::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
