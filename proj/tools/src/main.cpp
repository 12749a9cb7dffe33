#include <iostream>

#include "abpscli/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return abps::cli::run(args, std::cout, std::cerr);
}
