#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cutpaste::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kInvariantFailure = 2,
  kGuardRefused = 3,
};

/// Runs one command line (without the program name). Primary output goes to
/// `out`, diagnostics and progress to `err`; `in` supplies the permutation
/// when --perm is absent.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace cutpaste::cli
