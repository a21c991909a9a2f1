#pragma once

#include <exception>
#include <string>
#include <utility>
#include <vector>

namespace dopgb::cli {

enum ExitCode : int {
  kOk = 0,
  kError = 1,
  kParseError = 2,
  kCapExceeded = 3,
  kInvariantViolation = 4,
};

struct CommandResult {
  int code = kOk;
  std::string out;
  std::string err;
};

/// Exit code and one-line message for an exception thrown by a command.
std::pair<int, std::string> describe_error(std::exception_ptr error);

/// Runs one command line, e.g. {"gb", "file.dop", "--method", "ip"}.
/// The program name is not part of `args`. A file argument of "-" reads
/// `stdin_text` instead.
CommandResult run_command(const std::vector<std::string>& args,
                          const std::string& stdin_text = {});

}  // namespace dopgb::cli
