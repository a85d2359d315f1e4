#include <iostream>

#include "moldkit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const auto res = moldkit::cli::run_command(args);
  std::cout << res.out;
  std::cerr << res.err;
  return res.exit_code;
}
