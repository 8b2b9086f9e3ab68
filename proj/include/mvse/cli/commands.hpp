#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mvse/io/json_io.hpp"

namespace mvse::cli {

enum class Status { ok, refused, error };

/// Exit code 0 iff ok; refusals (sound negative answers) exit with 2, errors
/// with 1.
struct CommandResult {
  Status status = Status::ok;
  io::Json payload;
  int exit_code = 0;
  std::string text;  ///< human-readable output printed before the payload
};

/// Dispatches one invocation. `args` excludes the program name. Inputs
/// named "-" (or omitted) are read from `in`.
CommandResult run(const std::vector<std::string>& args, std::istream& in);

/// Writes the result the way the executable does: text, then the payload as
/// indented JSON.
void print(const CommandResult& result, std::ostream& out);

}  // namespace mvse::cli
