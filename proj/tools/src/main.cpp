#include <iostream>

#include "sn/cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  sn::cli::Outcome r = sn::cli::run_command(args);
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}
