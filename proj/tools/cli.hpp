#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tccs::cli {

enum Exit : int {
  kOk = 0,
  kNotRelated = 1,
  kUsage = 2,  // also parse and mode errors
  kBound = 3,
};

/// Runs one invocation. `args` excludes the program name; `in` feeds the
/// stepper and a `-` input path.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace tccs::cli
