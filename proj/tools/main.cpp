#include <iostream>
#include <string>
#include <vector>

#include "mvse/cli/commands.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const auto result = mvse::cli::run(args, std::cin);
  mvse::cli::print(result, std::cout);
  return result.exit_code;
}
