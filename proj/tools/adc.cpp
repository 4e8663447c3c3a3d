#include <iostream>
#include <string>
#include <vector>

#include "adc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const adc::CliResult r = adc::run_cli(args);
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}
