#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nomcode::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 1,
  kVerificationFailed = 2,
  kBoundRefused = 3,
};

/// Runs one invocation. args excludes the program name. Never throws.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace nomcode::cli
