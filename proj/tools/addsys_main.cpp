#include <iostream>

#include "addsys/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  const std::vector<std::string> args(argv + 1, argv + argc);
  const auto r = addsys::cli::run(args, std::cin);
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}
