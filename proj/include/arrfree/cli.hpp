#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "arrfree/error.hpp"

namespace arrfree {

enum ExitCode : int {
  kExitOk = 0,
  kExitParse = 2,
  kExitFieldMismatch = 3,
  kExitSelfCheck = 4,
  kExitNotDrawable = 5,
};

int exit_code_for(ErrorKind kind);

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arrfree
