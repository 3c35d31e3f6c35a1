#include <iostream>

#include "liesym/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const auto outcome = liesym::cli::run(args, std::cin);
  std::cout << outcome.out;
  std::cerr << outcome.err;
  return outcome.exit_code;
}
