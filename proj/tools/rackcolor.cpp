#include <iostream>

#include "rackcolor/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto result = rackcolor::cli::dispatch(args);
  std::cout << result.output;
  std::cerr << result.error;
  return result.exit_code;
}
