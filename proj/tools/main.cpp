#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  int code = 0;
  const auto config = tesserae::cli::parse_args(argc, argv, std::cout, std::cerr, code);
  if (!config) return code;
  return tesserae::cli::dispatch(*config, std::cout, std::cerr);
}
