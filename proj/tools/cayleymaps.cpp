#include <iostream>

#include "cayley/cli.hpp"

int main(int argc, char** argv) {
  int code = 0;
  const auto request = cayley::cli::parse_args(argc, argv, std::cout, std::cerr, code);
  if (!request) return code;
  return cayley::cli::run(*request, std::cout, std::cerr);
}
