#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace curvespace::cli {

enum ExitCode : int {
  kOk = 0,
  kNegative = 1,   // reghom: not equivalent; verify: failed
  kInvalid = 2,    // bad flags, unparsable input, regime mismatch
  kUndecided = 3,  // search bound exhausted
  kInternal = 4,
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace curvespace::cli
