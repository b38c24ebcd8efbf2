#pragma once

// Command-line front end. `run` is the whole program minus process I/O so
// that tests can drive it in-process.

#include <iosfwd>
#include <string>
#include <vector>

namespace addsys::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kInputError = 2;
inline constexpr int kCapExceeded = 3;

struct CommandResult {
  int exit_code = kOk;
  std::string out;
  std::string err;
};

/// `args` excludes the program name. `-` as a file argument reads `in`.
CommandResult run(const std::vector<std::string>& args, std::istream& in);

}  // namespace addsys::cli
