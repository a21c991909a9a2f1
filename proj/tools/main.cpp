#include <iostream>
#include <iterator>

#include "dopgb/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::string stdin_text;
  for (const auto& a : args) {
    if (a == "-") {
      stdin_text.assign(std::istreambuf_iterator<char>(std::cin), {});
      break;
    }
  }
  auto result = dopgb::cli::run_command(args, stdin_text);
  std::cout << result.out;
  std::cerr << result.err;
  return result.code;
}
