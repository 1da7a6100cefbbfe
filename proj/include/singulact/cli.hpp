#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace singulact::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kUnsupported = 2,
  kCheckFailed = 3,
  kInternal = 4,
};

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace singulact::cli
